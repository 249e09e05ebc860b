#include <catch_amalgamated.hpp>

#include "acceptance/oracles.hpp"
#include "susyindex/genera.hpp"

using namespace susyindex;

namespace {

/// Library class polynomial expanded in formal roots, against the brute-force product.
bool matches_root_oracle(const GradedPolynomial& p, const oracle::Coeffs& f, unsigned roots, unsigned power,
                         unsigned x_degree) {
  std::map<std::vector<unsigned>, Rational> classes;
  for (const auto& [m, c] : p.terms()) classes[m.exponents] = c;
  return oracle::expand_classes(classes, roots, power, x_degree) == oracle::product_over_roots(f, roots, x_degree);
}

}  // namespace

TEST_CASE("L classes") {
  CHECK(l_class(0).polynomial.str() == "1");
  CHECK(l_class(1).polynomial.str() == "1 + 1/3·p1");
  CHECK(l_class(2).polynomial.str() == "1 + 1/3·p1 + 7/45·p2 - 1/45·p1^2");
  CHECK(l_class(3).polynomial.homogeneous(12).str() == "62/945·p3 - 13/945·p1·p2 + 2/945·p1^3");
}

TEST_CASE("A-hat classes") {
  CHECK(a_hat_class(0).polynomial.str() == "1");
  CHECK(a_hat_class(1).polynomial.str() == "1 - 1/24·p1");
  CHECK(a_hat_class(2).polynomial.str() == "1 - 1/24·p1 - 1/1440·p2 + 7/5760·p1^2");
}

TEST_CASE("Todd classes") {
  CHECK(todd_class(1).polynomial.str() == "1 + 1/2·c1");
  CHECK(todd_class(2).polynomial.str() == "1 + 1/2·c1 + 1/12·c2 + 1/12·c1^2");
  CHECK(todd_class(3).polynomial.homogeneous(6).str() == "1/24·c1·c2");
}

TEST_CASE("classes agree with the brute-force root product") {
  for (unsigned l = 1; l <= 4; ++l) {
    CHECK(matches_root_oracle(l_class(l).polynomial, oracle::x_over_tanh(2 * l), l, 2, 2 * l));
    CHECK(matches_root_oracle(a_hat_class(l).polynomial, oracle::half_x_over_sinh(2 * l), l, 2, 2 * l));
  }
  for (unsigned n = 1; n <= 5; ++n) CHECK(matches_root_oracle(todd_class(n).polynomial, oracle::todd_series(n), n, 1, n));
}

TEST_CASE("degree-0 term is 1; no degree 2 mod 4 in L and A-hat") {
  for (unsigned l = 0; l <= 5; ++l) {
    for (const auto& g : {l_class(l), a_hat_class(l)}) {
      CHECK(g.polynomial.constant_term() == Rational(1));
      for (const auto& [m, c] : g.polynomial.terms()) CHECK(m.degree % 4 == 0);
    }
    CHECK(todd_class(l).polynomial.constant_term() == Rational(1));
  }
}

TEST_CASE("constant series gives 1") {
  const auto one = TaylorSeries::constant(1, 6);
  CHECK(multiplicative_sequence(one, 3, class_names("c", 3), RootMode::chern).str() == "1");
  CHECK_THROWS_AS(multiplicative_sequence(TaylorSeries::constant(2, 6), 1, {"c1"}, RootMode::chern), Error);
  CHECK_THROWS_AS(multiplicative_sequence(genus_series(GenusKind::Todd, 6), 1, {"p1"}, RootMode::pontryagin), Error);
}

TEST_CASE("multiplicativity over disjoint root sets") {
  // The two-root sequence pulled back along the Whitney sum of two one-root bundles
  // equals the product of one-root factors, through degree 8 (Pontryagin) or 4 (Chern).
  struct Case {
    GenusKind kind;
    RootMode mode;
    unsigned root_degree;
  };
  for (const Case& k : {Case{GenusKind::L, RootMode::pontryagin, 4}, Case{GenusKind::A_hat, RootMode::pontryagin, 4},
                        Case{GenusKind::Todd, RootMode::chern, 2}}) {
    const unsigned trunc = 2 * k.root_degree;
    const Basis uv({{"u", k.root_degree}, {"v", k.root_degree}}, trunc);
    const auto u = GradedPolynomial::generator(uv, "u"), v = GradedPolynomial::generator(uv, "v");
    const auto f = genus_series(k.kind, 4);
    std::vector<Rational> coeffs;
    for (unsigned j = 0; j <= f.order(); j += (k.mode == RootMode::pontryagin ? 2 : 1)) coeffs.push_back(f[j]);

    const auto two = multiplicative_sequence(f, 2, {"k1", "k2"}, k.mode);
    const std::vector<GradedPolynomial> whitney{u + v, u * v};
    CHECK(two.substitute(whitney, uv) == series_of(coeffs, u) * series_of(coeffs, v));

    const auto one = multiplicative_sequence(f, 1, {"k1"}, k.mode);
    const Basis u_only({{"u", k.root_degree}}, k.root_degree);
    const auto u1 = GradedPolynomial::generator(u_only, "u");
    CHECK(one.substitute(std::vector<GradedPolynomial>{u1}, u_only) == series_of(coeffs, u1));
  }
}

TEST_CASE("chern character of a line bundle") {
  const Basis h({{"h", 2}}, 2);
  const auto hh = GradedPolynomial::generator(h, "h");
  CHECK(chern_character(1, {hh * Rational(5)}, h).polynomial == GradedPolynomial::constant(h, 1) + hh * Rational(5));
  CHECK(chern_character(3, {}, h).polynomial == GradedPolynomial::constant(h, 3));
  CHECK_THROWS_AS(chern_character(1, {GradedPolynomial::generator(Basis({{"h", 2}}, 4), "h")}, h), BasisMismatch);
}

TEST_CASE("chern character: rank 2 degree-4 term") {
  const Basis b({{"c1", 2}, {"c2", 4}}, 6);
  const auto c1 = GradedPolynomial::generator(b, "c1"), c2 = GradedPolynomial::generator(b, "c2");
  const auto ch = chern_character(2, {c1, c2}, b).polynomial;
  CHECK(ch.homogeneous(4) == (c1 * c1 - c2 * Rational(2)) * Rational(1, 2));
  CHECK(ch.homogeneous(6) == (c1.pow(3) - c1 * c2 * Rational(3)) * Rational(1, 6));
  CHECK_THROWS_AS(chern_character(2, {c2}, b), Error);
}

TEST_CASE("chern character: additive and multiplicative") {
  const Basis xy({{"x", 2}, {"y", 2}}, 6);
  const auto x = GradedPolynomial::generator(xy, "x"), y = GradedPolynomial::generator(xy, "y");
  const auto exp_of = [&](const GradedPolynomial& g) { return series_of(genus_series(GenusKind::Exp, 3).coefficients(), g); };
  const auto ch_x = chern_character(1, {x}, xy).polynomial;
  const auto ch_y = chern_character(1, {y}, xy).polynomial;
  CHECK(ch_x == exp_of(x));
  // direct sum: c = (1+x)(1+y)
  CHECK(chern_character(2, {x + y, x * y}, xy).polynomial == ch_x + ch_y);
  // tensor of line bundles: c1 = x + y
  CHECK(chern_character(1, {x + y}, xy).polynomial == exp_of(x + y));
  CHECK(exp_of(x + y) == ch_x * ch_y);
}

TEST_CASE("chern to pontryagin") {
  const Basis h({{"h", 2}}, 4);
  const auto hh = GradedPolynomial::generator(h, "h");
  const auto p = chern_to_pontryagin({hh * Rational(3), hh * hh * Rational(3)}, 4);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == hh * hh * Rational(3));

  const Basis c({{"c1", 2}, {"c2", 4}}, 8);
  const auto c2 = GradedPolynomial::generator(c, "c2");
  CHECK(chern_to_pontryagin({GradedPolynomial(c), c2}, 8)[0] == c2 * Rational(-2));
  for (const auto& pk : chern_to_pontryagin({GradedPolynomial(c), GradedPolynomial(c)}, 8)) CHECK(pk.is_zero());
}

TEST_CASE("signature integrand identity") {
  for (unsigned l = 0; l <= 6; ++l) CHECK(signature_integrand_identity_check(l));
  CHECK_THROWS_AS(signature_integrand_identity_check(7), Error);
}
