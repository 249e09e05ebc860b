#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "susyindex/bernoulli.hpp"
#include "susyindex/rational.hpp"

namespace susyindex {

/// Truncated power series sum_{k=0}^{order} a_k x^k with exact coefficients.
class TaylorSeries {
 public:
  TaylorSeries(std::string variable, std::vector<Rational> coefficients)
      : variable_(std::move(variable)), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) coefficients_.emplace_back(0);
  }

  static TaylorSeries constant(Rational c, unsigned order, std::string variable = "x") {
    std::vector<Rational> coeffs(order + 1, Rational(0));
    coeffs[0] = std::move(c);
    return {std::move(variable), std::move(coeffs)};
  }

  const std::string& variable() const { return variable_; }
  unsigned order() const { return static_cast<unsigned>(coefficients_.size() - 1); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](unsigned k) const { return coefficients_[k]; }

  bool is_even() const {
    for (unsigned k = 1; k <= order(); k += 2)
      if (!coefficients_[k].is_zero()) return false;
    return true;
  }

  /// f(c x), truncated at the same order.
  TaylorSeries rescaled(const Rational& c) const {
    std::vector<Rational> out(coefficients_);
    Rational power(1);
    for (auto& a : out) {
      a *= power;
      power *= c;
    }
    return {variable_, std::move(out)};
  }

  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> out(order + 1, Rational(0));
    for (unsigned i = 0; i <= order; ++i)
      for (unsigned j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return {a.variable_, std::move(out)};
  }

  friend bool operator==(const TaylorSeries& a, const TaylorSeries& b) {
    return a.coefficients_ == b.coefficients_;
  }

  std::string str() const {
    std::string out;
    for (unsigned k = 0; k <= order(); ++k) {
      const Rational& a = coefficients_[k];
      if (a.is_zero()) continue;
      std::string mag = (a.sign() < 0 ? -a : a).str();
      if (!out.empty()) out += a.sign() < 0 ? " - " : " + ";
      else if (a.sign() < 0) out += "-";
      if (k == 0) {
        out += mag;
        continue;
      }
      if (mag != "1") out += mag + "·";
      out += variable_;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::string variable_;
  std::vector<Rational> coefficients_;
};

enum class GenusKind { L, A_hat, Todd, Exp };

inline std::string_view to_string(GenusKind k) {
  switch (k) {
    case GenusKind::L: return "L";
    case GenusKind::A_hat: return "Ahat";
    case GenusKind::Todd: return "Todd";
    case GenusKind::Exp: return "Exp";
  }
  return "?";
}

/// Generating series of the genus: x/tanh x, (x/2)/sinh(x/2), x/(1-e^{-x}), e^x.
inline TaylorSeries genus_series(GenusKind kind, unsigned order) {
  std::vector<Rational> c(order + 1, Rational(0));
  if (kind == GenusKind::Exp) {
    for (unsigned k = 0; k <= order; ++k) c[k] = Rational(1, factorial(k));
    return {"x", std::move(c)};
  }
  const auto b = bernoulli_table(order);
  for (unsigned k = 0; k <= order; ++k) {
    Rational over_fact = b[k] / Rational(factorial(k));
    switch (kind) {
      case GenusKind::L:
        // x/tanh x = sum 2^{2j} B_{2j} x^{2j} / (2j)!
        if (k % 2 == 0) c[k] = pow(Rational(2), k) * over_fact;
        break;
      case GenusKind::A_hat:
        // x/sinh x = sum (2 - 2^{2j}) B_{2j} x^{2j} / (2j)!, then x -> x/2
        if (k % 2 == 0) c[k] = (Rational(2) - pow(Rational(2), k)) * over_fact / pow(Rational(2), k);
        break;
      case GenusKind::Todd:
        // x/(1-e^{-x}) = sum (-1)^k B_k x^k / k!
        c[k] = (k % 2 == 0) ? over_fact : -over_fact;
        break;
      case GenusKind::Exp:
        break;
    }
  }
  return {"x", std::move(c)};
}

}  // namespace susyindex
