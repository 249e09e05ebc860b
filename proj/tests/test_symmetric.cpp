#include <catch_amalgamated.hpp>

#include <random>

#include "susyindex/genera.hpp"
#include "susyindex/symmetric.hpp"

using namespace susyindex;

TEST_CASE("power sums in two roots") {
  const Basis roots = Basis::uniform(class_names("x", 2), 2, 4);
  const auto x1 = GradedPolynomial::generator(roots, 0), x2 = GradedPolynomial::generator(roots, 1);
  const auto reduced = symmetric_reduce(x1 * x1 + x2 * x2, 2, {"e1", "e2"});
  CHECK(reduced.str() == "-2·e2 + e1^2");
}

TEST_CASE("constants survive with zero roots") {
  const Basis none({}, 0);
  const auto r = symmetric_reduce(GradedPolynomial::constant(none, 5), 0, {});
  CHECK(r.constant_term() == Rational(5));
}

TEST_CASE("non-symmetric input names the transposition") {
  const Basis roots = Basis::uniform(class_names("x", 3), 2, 6);
  const auto x2 = GradedPolynomial::generator(roots, 1);
  try {
    symmetric_reduce(x2, 3, {"e1", "e2", "e3"});
    FAIL("expected NonSymmetric");
  } catch (const NonSymmetric& e) {
    CHECK(e.first == 0);
    CHECK(e.second == 1);
  }
}

TEST_CASE("reduce inverts substitution of elementary polynomials") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (unsigned n = 1; n <= 4; ++n) {
    const unsigned trunc = 8;
    const Basis roots = Basis::uniform(class_names("x", n), 2, trunc);
    const Basis classes = Basis::graded_names("e", n, 2, trunc);
    const auto e = elementary_symmetric(roots);
    for (int trial = 0; trial < 10; ++trial) {
      GradedPolynomial q(classes);
      std::uniform_int_distribution<unsigned> exp(0, 4);
      for (int t = 0; t < 6; ++t) {
        std::vector<unsigned> exps(n);
        for (auto& v : exps) v = exp(rng);  // out-of-range degrees are truncated away
        q.add_term(exps, coeff(rng));
      }
      const auto in_roots = q.substitute(e, roots);
      CHECK(symmetric_reduce(in_roots, n, class_names("e", n)) == q);
    }
  }
}
