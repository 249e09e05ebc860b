#pragma once

// Reference computations that share no code path with the library's genus
// construction: power series by long division of elementary series, and
// products over formal roots on a plain exponent map.

#include <map>
#include <vector>

#include "susyindex/rational.hpp"

namespace susyindex::oracle {

using Coeffs = std::vector<Rational>;

/// num / den as power series through x^order; den[0] must be non-zero.
inline Coeffs divide_series(const Coeffs& num, const Coeffs& den, unsigned order) {
  Coeffs q(order + 1, Rational(0));
  Coeffs rem(num);
  rem.resize(order + 1, Rational(0));
  for (unsigned k = 0; k <= order; ++k) {
    q[k] = rem[k] / den[0];
    for (unsigned j = 0; j < den.size() && k + j <= order; ++j) rem[k + j] -= q[k] * den[j];
  }
  return q;
}

/// x / tanh x = cosh x / (sinh x / x).
inline Coeffs x_over_tanh(unsigned order) {
  Coeffs num(order + 1, Rational(0)), den(order + 1, Rational(0));
  Integer fact = 1;
  for (unsigned k = 0; k <= order + 1; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 0 && k <= order) num[k] = Rational(1, fact);
    if (k % 2 == 1 && k - 1 <= order) den[k - 1] = Rational(1, fact);
  }
  return divide_series(num, den, order);
}

/// (x/2) / sinh(x/2) = 1 / (sum (x/2)^{2k} / (2k+1)!).
inline Coeffs half_x_over_sinh(unsigned order) {
  Coeffs num(order + 1, Rational(0)), den(order + 1, Rational(0));
  num[0] = 1;
  Integer fact = 1;
  Integer two_pow = 1;
  for (unsigned k = 0; k <= order; ++k) {
    fact *= (k + 1);  // (k+1)!
    if (k % 2 == 0) den[k] = Rational(1, fact * two_pow);
    two_pow *= 2;
  }
  return divide_series(num, den, order);
}

/// x / (1 - e^{-x}) = 1 / (sum (-1)^k x^k / (k+1)!).
inline Coeffs todd_series(unsigned order) {
  Coeffs num(order + 1, Rational(0)), den(order + 1, Rational(0));
  num[0] = 1;
  Integer fact = 1;
  for (unsigned k = 0; k <= order; ++k) {
    fact *= (k + 1);
    den[k] = Rational(k % 2 == 0 ? 1 : -1, fact);
  }
  return divide_series(num, den, order);
}

/// Polynomial in formal roots x_1..x_r; key = exponent vector, total x-degree bounded.
using RootPoly = std::map<std::vector<unsigned>, Rational>;

inline unsigned total(const std::vector<unsigned>& e) {
  unsigned t = 0;
  for (unsigned v : e) t += v;
  return t;
}

inline void add_to(RootPoly& p, const std::vector<unsigned>& e, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = p[e];
  slot += c;
  if (slot.is_zero()) p.erase(e);
}

inline RootPoly multiply(const RootPoly& a, const RootPoly& b, unsigned max_degree) {
  RootPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (total(e) <= max_degree) add_to(out, e, ca * cb);
    }
  return out;
}

/// prod_{i=1}^{r} f(x_i) through total degree max_degree in the x's.
inline RootPoly product_over_roots(const Coeffs& f, unsigned roots, unsigned max_degree) {
  RootPoly out;
  out[std::vector<unsigned>(roots, 0)] = 1;
  for (unsigned i = 0; i < roots; ++i) {
    RootPoly factor;
    for (unsigned k = 0; k < f.size() && k <= max_degree; ++k) {
      std::vector<unsigned> e(roots, 0);
      e[i] = k;
      add_to(factor, e, f[k]);
    }
    out = multiply(out, factor, max_degree);
  }
  return out;
}

/// e_k(x_1^s, ..., x_r^s) by summing over k-subsets.
inline RootPoly elementary(unsigned roots, unsigned k, unsigned s) {
  RootPoly out;
  for (unsigned mask = 0; mask < (1U << roots); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<unsigned> e(roots, 0);
    for (unsigned i = 0; i < roots; ++i)
      if (mask & (1U << i)) e[i] = s;
    add_to(out, e, 1);
  }
  return out;
}

/// A polynomial in classes (exponent of class k at index k-1), class k = e_k(x^s), expanded in roots.
inline RootPoly expand_classes(const std::map<std::vector<unsigned>, Rational>& poly, unsigned roots, unsigned s,
                               unsigned max_degree) {
  RootPoly out;
  for (const auto& [exps, c] : poly) {
    RootPoly term;
    term[std::vector<unsigned>(roots, 0)] = c;
    for (std::size_t k = 0; k < exps.size(); ++k)
      for (unsigned j = 0; j < exps[k]; ++j)
        term = multiply(term, elementary(roots, static_cast<unsigned>(k + 1), s), max_degree);
    for (const auto& [e, v] : term) add_to(out, e, v);
  }
  return out;
}

inline RootPoly homogeneous(const RootPoly& p, unsigned degree) {
  RootPoly out;
  for (const auto& [e, c] : p)
    if (total(e) == degree) out[e] = c;
  return out;
}

}  // namespace susyindex::oracle
