#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>

#include "susyindex/clifford.hpp"
#include "susyindex/errors.hpp"
#include "susyindex/rational.hpp"

namespace susyindex::clifford {

/// Element of the Grassmann algebra on generators psi^1..psi^64. Each basis
/// monomial is stored in ascending generator order as a bitmask.
class GrassmannElement {
 public:
  using Mask = std::uint64_t;

  GrassmannElement() = default;
  GrassmannElement(GaussianRational c) { add(0, std::move(c)); }  // NOLINT(google-explicit-constructor)

  /// psi^{i_1} psi^{i_2} ... in the given order (1-based), reordered with sign.
  static GrassmannElement product(std::initializer_list<unsigned> generators) {
    GrassmannElement e(GaussianRational(Rational(1)));
    for (unsigned g : generators) e = e * generator(g);
    return e;
  }
  static GrassmannElement generator(unsigned index) {
    if (index < 1 || index > 64) throw Error("grassmann generator index out of range");
    GrassmannElement e;
    e.add(Mask{1} << (index - 1), GaussianRational(Rational(1)));
    return e;
  }

  const std::map<Mask, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend GrassmannElement operator*(const GaussianRational& s, GrassmannElement a) {
    GrassmannElement out;
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
  }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if ((ma & mb) != 0) continue;  // (psi^k)^2 = 0
        const int sign = reorder_sign(ma, mb);
        out.add(ma | mb, sign > 0 ? ca * cb : -(ca * cb));
      }
    return out;
  }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) { return a.terms_ == b.terms_; }

 private:
  /// Sign of moving every generator of b left past the larger generators of a.
  static int reorder_sign(Mask a, Mask b) {
    unsigned swaps = 0;
    while (b != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(b));
      b &= b - 1;
      const Mask above = bit == 63 ? Mask{0} : (~Mask{0} << (bit + 1));
      swaps += static_cast<unsigned>(std::popcount(a & above));
    }
    return swaps % 2 == 0 ? 1 : -1;
  }

  void add(Mask m, GaussianRational c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Mask, GaussianRational> terms_;
};

/// Berezin integral with measure dpsi^1 ... dpsi^{n_gen}, innermost differential
/// acting first: returns the coefficient of psi^{n_gen} ... psi^1.
inline GaussianRational berezin_integrate(const GrassmannElement& e, unsigned n_gen) {
  if (n_gen > 64) throw Error("berezin_integrate supports at most 64 generators");
  const GrassmannElement::Mask top = n_gen == 64 ? ~GrassmannElement::Mask{0} : ((GrassmannElement::Mask{1} << n_gen) - 1);
  // psi^{n} ... psi^1 = (-1)^{n(n-1)/2} psi^1 ... psi^n
  const std::uint64_t reversal = static_cast<std::uint64_t>(n_gen) * (n_gen == 0 ? 0 : n_gen - 1) / 2;
  GaussianRational c = e.coefficient(top);
  return reversal % 2 == 0 ? c : -c;
}

/// N_{psi_2} from 2^n = Tr gamma_{2n+1}^2 = N (2i)^n int dpsi^1..dpsi^{2n} psi^1 ... psi^{2n},
/// with Tr gamma_{2n+1}^2 taken from the explicit gamma representation.
inline GaussianRational normalization_psi2(unsigned n) {
  const auto rep = build_gamma(n);
  const auto chi = chirality(rep);
  const GaussianInt trace_sq = (chi * chi).trace();
  const GaussianRational trace(Rational(trace_sq.re), Rational(trace_sq.im));

  GrassmannElement top(GaussianRational(Rational(1)));
  for (unsigned g = 1; g <= 2 * n; ++g) top = top * GrassmannElement::generator(g);
  const GaussianRational integral = berezin_integrate(top, 2 * n);

  GaussianRational two_i_pow(Rational(1));
  for (unsigned k = 0; k < n; ++k) two_i_pow *= GaussianRational(Rational(0), Rational(2));
  return trace / (two_i_pow * integral);
}

}  // namespace susyindex::clifford
