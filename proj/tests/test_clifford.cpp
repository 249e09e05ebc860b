#include <catch_amalgamated.hpp>

#include <random>

#include "susyindex/clifford.hpp"
#include "susyindex/grassmann.hpp"

using namespace susyindex;
using namespace susyindex::clifford;

namespace {
GaussianRational q(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford relations") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto rep = build_gamma(n);
    CHECK(rep.matrices.size() == 2 * n);
    CHECK(rep.dimension() == (std::size_t{1} << n));
    CHECK(clifford_relations_hold(rep));
  }
  CHECK_THROWS_AS(build_gamma(0), Error);
  CHECK_THROWS_AS(build_gamma(6), Error);
}

TEST_CASE("n = 1 is the Pauli pair") {
  const auto rep = build_gamma(1);
  CHECK(rep.matrices[0] == sigma1());
  CHECK(rep.matrices[1] == sigma2());
  CHECK(chirality(rep) == GaussianInt(0, 1) * (sigma1() * sigma2()));
  CHECK(chirality(rep) == GammaMatrix(2, {-1, 0, 0, 1}));
}

TEST_CASE("chirality is traceless and squares to one") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto rep = build_gamma(n);
    const auto chi = chirality(rep);
    CHECK(chi.trace() == GaussianInt(0));
    CHECK(chi * chi == GammaMatrix::identity(rep.dimension()));
    CHECK((chi * chi).trace() == GaussianInt(std::int64_t{1} << n));
    CHECK(chi.adjoint() == chi);
    for (const auto& g : rep.matrices) CHECK(anticommutator(chi, g) == GammaMatrix(rep.dimension()));
  }
}

TEST_CASE("grassmann generators anticommute and square to zero") {
  const auto p1 = GrassmannElement::generator(1), p2 = GrassmannElement::generator(2);
  CHECK((p1 * p1).is_zero());
  CHECK(p1 * p2 == q(-1) * (p2 * p1));
  for (unsigned k = 1; k <= 10; ++k) {
    const auto pk = GrassmannElement::generator(k);
    CHECK((pk * pk).is_zero());
  }
  CHECK(GrassmannElement::product({3, 1, 3}).is_zero());
  CHECK_THROWS_AS(GrassmannElement::generator(0), Error);
}

TEST_CASE("berezin integral extracts the reversed top monomial") {
  // measure dpsi^1 dpsi^2: picks the coefficient of psi^2 psi^1
  CHECK(berezin_integrate(GrassmannElement::product({2, 1}), 2) == q(1));
  CHECK(berezin_integrate(GrassmannElement::product({1, 2}), 2) == q(-1));
  CHECK(berezin_integrate(GrassmannElement::product({1}), 2) == q(0));
  CHECK(berezin_integrate(GrassmannElement::product({1}), 1) == q(1));
  CHECK(berezin_integrate(GrassmannElement(q(5)), 0) == q(5));
}

TEST_CASE("berezin integral is linear") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-6, 6), gen(1, 4);
  auto random_element = [&] {
    GrassmannElement e;
    for (int t = 0; t < 6; ++t) {
      GrassmannElement term = GrassmannElement::product({});
      const int len = gen(rng);
      for (int j = 0; j < len; ++j) term = term * GrassmannElement::generator(static_cast<unsigned>(gen(rng)));
      e = e + q(coeff(rng), coeff(rng)) * term;
    }
    return e;
  };
  for (int i = 0; i < 50; ++i) {
    const auto a = random_element(), b = random_element();
    const auto s = q(coeff(rng), coeff(rng));
    CHECK(berezin_integrate(a + s * b, 4) == berezin_integrate(a, 4) + s * berezin_integrate(b, 4));
  }
}

TEST_CASE("normalization N_psi2 = i^n") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto norm = normalization_psi2(n);
    CHECK(norm == GaussianRational::i_pow(n));
    CHECK(norm.is_real() == (n % 2 == 0));
  }
  // period four
  CHECK(normalization_psi2(5) == normalization_psi2(1));
  CHECK(normalization_psi2(1) * normalization_psi2(1) == normalization_psi2(2));
}
