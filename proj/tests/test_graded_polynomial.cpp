#include <catch_amalgamated.hpp>

#include <random>

#include "susyindex/graded_polynomial.hpp"

using namespace susyindex;

namespace {

Basis two_generators(unsigned trunc = 8) { return Basis({{"a", 2}, {"b", 4}}, trunc); }

GradedPolynomial random_poly(const Basis& basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 3);
  GradedPolynomial p(basis);
  for (int t = 0; t < 5; ++t) p.add_term({static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))}, coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("generators must have even positive degree") {
  CHECK_THROWS_AS(Basis({{"x", 3}}, 6), Error);
  CHECK_THROWS_AS(Basis({{"x", 0}}, 6), Error);
  CHECK_NOTHROW(Basis({{"x", 2}}, 6));
}

TEST_CASE("truncation drops high degrees") {
  const Basis b = two_generators(4);
  const auto a = GradedPolynomial::generator(b, "a");
  const auto p = (GradedPolynomial::constant(b, 1) + a).pow(5);
  CHECK(p.str() == "1 + 5·a + 10·a^2");
  CHECK(p.homogeneous(4) == a * a * Rational(10));
  CHECK(p.truncated(2).str() == "1 + 5·a");
}

TEST_CASE("printing order is degree then lexicographic") {
  const Basis b = Basis::graded_names("p", 2, 4, 8);
  GradedPolynomial p(b);
  p.add_term({2, 0}, Rational(-1, 45));
  p.add_term({0, 1}, Rational(7, 45));
  p.add_term({1, 0}, Rational(1, 3));
  p.add_term({0, 0}, 1);
  CHECK(p.str() == "1 + 1/3·p1 + 7/45·p2 - 1/45·p1^2");
  CHECK(p.monomial_key(std::vector<unsigned>{2, 0}) == "p1^2");
  CHECK(p.monomial_key(std::vector<unsigned>{0, 0}) == "1");
  CHECK(GradedPolynomial(b).str() == "0");
}

TEST_CASE("multiplying across bases is an error") {
  const auto p = GradedPolynomial::generator(two_generators(), "a");
  const auto q = GradedPolynomial::generator(Basis({{"a", 2}}, 8), "a");
  CHECK_THROWS_AS(p * q, BasisMismatch);
  CHECK_THROWS_AS(p + q, BasisMismatch);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  const Basis b = two_generators(10);
  for (int i = 0; i < 40; ++i) {
    const auto p = random_poly(b, rng), q = random_poly(b, rng), r = random_poly(b, rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == GradedPolynomial(b));
  }
}

TEST_CASE("substitution is a ring map") {
  std::mt19937 rng(11);
  const Basis src = two_generators(8);
  const Basis dst({{"x", 2}, {"y", 2}}, 8);
  const auto x = GradedPolynomial::generator(dst, "x"), y = GradedPolynomial::generator(dst, "y");
  const std::vector<GradedPolynomial> images{x + y, x * y};
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poly(src, rng), q = random_poly(src, rng);
    CHECK((p * q).substitute(images, dst) == p.substitute(images, dst) * q.substitute(images, dst));
  }
}

TEST_CASE("monomial keys parse back") {
  const Basis b = two_generators();
  CHECK(parse_monomial(b, "a^2·b") == std::vector<unsigned>{2, 1});
  CHECK(parse_monomial(b, "a*b^1") == std::vector<unsigned>{1, 1});
  CHECK(parse_monomial(b, "1") == std::vector<unsigned>{0, 0});
  CHECK_THROWS_AS(parse_monomial(b, "c"), Error);
}
