#include <catch_amalgamated.hpp>

#include <random>

#include "susyindex/bernoulli.hpp"
#include "susyindex/rational.hpp"

using namespace susyindex;

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(3, -6)).denominator() == 2);
  CHECK(Rational(7, 45) * Rational(45) == Rational(7));
  CHECK((Rational(-1, 45)).str() == "-1/45");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(6, 3).fraction_str() == "2/1");
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("3/0"), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational(Rational(1)) / GaussianRational(), DivisionByZero);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("-16") == Rational(-16));
  CHECK(Rational::parse("7/5760") == Rational(7, 5760));
  CHECK(Rational::parse("+3/6") == Rational(1, 2));
  CHECK(Rational::parse("3/-6") == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  for (const char* bad : {"", "-", "1/", "x", "1.5", "1/2/3"}) CHECK_THROWS_AS(Rational::parse(bad), Error);
}

TEST_CASE("big values do not overflow") {
  const Rational r = pow(Rational(2, 3), 200);
  CHECK(r.numerator() == pow(Rational(2), 200).numerator());
  CHECK(factorial(30) == Integer("265252859812191058636308480000000"));
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.fraction_str()) == a);
  }
}

TEST_CASE("gaussian numbers") {
  const auto i = GaussianInt::i();
  CHECK(i * i == GaussianInt(-1));
  for (long long n = -8; n <= 8; ++n) CHECK(GaussianInt::i_pow(n) * GaussianInt::i_pow(-n) == GaussianInt(1));
  CHECK(GaussianRational::i_pow(3).str() == "-i");
  CHECK(GaussianRational(Rational(1, 2), Rational(3, 4)).str() == "1/2+3/4i");
  const GaussianRational z(Rational(1), Rational(2));
  CHECK(z / z == GaussianRational(Rational(1)));
}

TEST_CASE("bernoulli numbers") {
  const auto b = bernoulli_table(12);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[6] == Rational(1, 42));
  CHECK(b[12] == Rational(-691, 2730));
  SECTION("odd indices above 1 vanish") {
    const auto t = bernoulli_table(41);
    for (unsigned k = 3; k <= 41; k += 2) CHECK(t[k].is_zero());
  }
}
