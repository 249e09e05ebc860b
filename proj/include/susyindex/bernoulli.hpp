#pragma once

#include <vector>

#include "susyindex/rational.hpp"

namespace susyindex {

/// Bernoulli numbers B_0..B_k with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_table(unsigned k) {
  std::vector<Rational> b;
  b.reserve(k + 1);
  b.emplace_back(1);
  for (unsigned m = 1; m <= k; ++m) {
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

inline Rational bernoulli(unsigned k) { return bernoulli_table(k).back(); }

}  // namespace susyindex
