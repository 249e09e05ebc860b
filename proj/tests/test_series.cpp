#include <catch_amalgamated.hpp>

#include "acceptance/oracles.hpp"
#include "susyindex/taylor_series.hpp"

using namespace susyindex;

TEST_CASE("genus series match long division") {
  for (unsigned order : {0U, 1U, 6U, 14U}) {
    CHECK(genus_series(GenusKind::L, order).coefficients() == oracle::x_over_tanh(order));
    CHECK(genus_series(GenusKind::A_hat, order).coefficients() == oracle::half_x_over_sinh(order));
    CHECK(genus_series(GenusKind::Todd, order).coefficients() == oracle::todd_series(order));
  }
}

TEST_CASE("first coefficients") {
  const auto l = genus_series(GenusKind::L, 4);
  CHECK(l.str() == "1 + 1/3·x^2 - 1/45·x^4");
  const auto a = genus_series(GenusKind::A_hat, 4);
  CHECK(a[2] == Rational(-1, 24));
  CHECK(a[4] == Rational(7, 5760));
  const auto t = genus_series(GenusKind::Todd, 4);
  CHECK(t[1] == Rational(1, 2));
  CHECK(t[2] == Rational(1, 12));
  CHECK(t[3] == Rational(0));
  CHECK(t[4] == Rational(-1, 720));
}

TEST_CASE("L and A-hat are even, Todd is not") {
  CHECK(genus_series(GenusKind::L, 20).is_even());
  CHECK(genus_series(GenusKind::A_hat, 20).is_even());
  CHECK_FALSE(genus_series(GenusKind::Todd, 20).is_even());
}

TEST_CASE("x/(1-e^-x) minus x/2 is even") {
  auto t = genus_series(GenusKind::Todd, 12).coefficients();
  t[1] -= Rational(1, 2);
  for (unsigned k = 1; k < t.size(); k += 2) CHECK(t[k].is_zero());
}

TEST_CASE("rescaling and products") {
  const auto l = genus_series(GenusKind::L, 8);
  const auto half = l.rescaled(Rational(1, 2));
  for (unsigned k = 0; k <= 8; ++k) CHECK(half[k] == l[k] * pow(Rational(1, 2), k));
  // e^x e^x = e^{2x}
  const auto e = genus_series(GenusKind::Exp, 8);
  CHECK(e * e == e.rescaled(2));
  const auto one = TaylorSeries::constant(1, 8);
  CHECK(one * l == l);
}
