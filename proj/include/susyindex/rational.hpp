#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "susyindex/errors.hpp"

namespace susyindex {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    // cpp_rational rejects a negative denominator; move the sign up
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "n", "-n" or "n/d".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_int = [&](std::string_view s) {
      if (s.empty()) throw Error("malformed rational '" + std::string(text) + "'");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw Error("malformed rational '" + std::string(text) + "'");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error("malformed rational '" + std::string(text) + "'");
      }
      return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }
  double to_double() const { return value_.convert_to<double>(); }

  /// "n" when integral, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }
  /// Always "n/d"; the serialized form.
  std::string fraction_str() const { return numerator().str() + "/" + denominator().str(); }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

inline Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

/// Complex number with exact components, e.g. Gaussian integers or Gaussian rationals.
template <class T>
struct ExactComplex {
  T re{};
  T im{};

  ExactComplex() = default;
  ExactComplex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static ExactComplex i() { return {T(0), T(1)}; }
  /// i^n for any integer n.
  static ExactComplex i_pow(long long n) {
    switch (((n % 4) + 4) % 4) {
      case 0: return {T(1), T(0)};
      case 1: return {T(0), T(1)};
      case 2: return {T(-1), T(0)};
      default: return {T(0), T(-1)};
    }
  }

  bool is_zero() const { return re == T(0) && im == T(0); }
  bool is_real() const { return im == T(0); }
  ExactComplex conj() const { return {re, -im}; }

  ExactComplex operator-() const { return {-re, -im}; }
  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    T norm = b.re * b.re + b.im * b.im;
    if (norm == T(0)) throw DivisionByZero();
    ExactComplex num = a * b.conj();
    return {num.re / norm, num.im / norm};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string str() const {
    auto s = [](const T& v) {
      if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
      else return v.str();
    };
    if (im == T(0)) return s(re);
    std::string imag;
    if (im == T(1)) imag = "i";
    else if (im == T(-1)) imag = "-i";
    else imag = s(im) + "i";
    if (re == T(0)) return imag;
    return s(re) + (imag[0] == '-' ? "" : "+") + imag;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.str(); }
};

using GaussianInt = ExactComplex<std::int64_t>;
using GaussianRational = ExactComplex<Rational>;

}  // namespace susyindex
