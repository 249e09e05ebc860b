#pragma once

#include "susyindex/bernoulli.hpp"
#include "susyindex/catalog.hpp"
#include "susyindex/clifford.hpp"
#include "susyindex/descriptor_io.hpp"
#include "susyindex/errors.hpp"
#include "susyindex/genera.hpp"
#include "susyindex/graded_polynomial.hpp"
#include "susyindex/grassmann.hpp"
#include "susyindex/index_engine.hpp"
#include "susyindex/manifold.hpp"
#include "susyindex/rational.hpp"
#include "susyindex/symmetric.hpp"
#include "susyindex/taylor_series.hpp"
#include "susyindex/verify.hpp"
#include "susyindex/zeta_det.hpp"
