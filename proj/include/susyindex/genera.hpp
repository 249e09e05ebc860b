#pragma once

#include <string>
#include <vector>

#include "susyindex/graded_polynomial.hpp"
#include "susyindex/symmetric.hpp"
#include "susyindex/taylor_series.hpp"

namespace susyindex {

/// How formal roots enter a multiplicative sequence.
///   chern:      roots x_i of degree 2, classes c_k = e_k(x) of degree 2k.
///   pontryagin: even series only; roots u_i = x_i^2 of degree 4, classes p_k = e_k(u) of degree 4k.
enum class RootMode { chern, pontryagin };

struct GenusClass {
  GenusKind kind = GenusKind::L;
  unsigned half_dim = 0;  // number of formal roots the class was built from
  GradedPolynomial polynomial;
  unsigned truncation = 0;
};

struct ChernCharacter {
  unsigned rank = 0;
  GradedPolynomial polynomial;
};

inline std::vector<std::string> class_names(const std::string& prefix, unsigned count) {
  std::vector<std::string> names;
  for (unsigned k = 1; k <= count; ++k) names.push_back(prefix + std::to_string(k));
  return names;
}

/// sum_k coeffs[k] * g^k over g's basis.
inline GradedPolynomial series_of(const std::vector<Rational>& coeffs, const GradedPolynomial& g) {
  GradedPolynomial out(g.basis());
  GradedPolynomial power = GradedPolynomial::constant(g.basis(), 1);
  for (std::size_t k = 0; k < coeffs.size() && !power.is_zero(); ++k) {
    out += power * coeffs[k];
    power *= g;
  }
  return out;
}

/// prod_{i=1}^{n} f(x_i) reduced to the classes `names`.
inline GradedPolynomial multiplicative_sequence(const TaylorSeries& f, unsigned n_roots,
                                                const std::vector<std::string>& names, RootMode mode) {
  if (f[0] != Rational(1)) throw Error("genus series must have constant term 1");
  std::vector<Rational> coeffs;
  unsigned root_degree = 2;
  if (mode == RootMode::pontryagin) {
    if (!f.is_even()) throw Error("pontryagin roots need an even series");
    root_degree = 4;
    for (unsigned k = 0; k <= f.order(); k += 2) coeffs.push_back(f[k]);
  } else {
    coeffs = f.coefficients();
  }
  if (coeffs.size() < n_roots + 1)
    throw Error("series order " + std::to_string(f.order()) + " too low for " + std::to_string(n_roots) + " roots");

  std::vector<std::string> root_names;
  for (unsigned i = 1; i <= n_roots; ++i)
    root_names.push_back((mode == RootMode::pontryagin ? "u" : "x") + std::to_string(i));
  const Basis roots = Basis::uniform(root_names, root_degree, n_roots * root_degree);

  GradedPolynomial product = GradedPolynomial::constant(roots, 1);
  for (unsigned i = 0; i < n_roots; ++i)
    product *= series_of(coeffs, GradedPolynomial::generator(roots, i));
  return symmetric_reduce(product, n_roots, names);
}

/// Hirzebruch L-class through degree 4l, in p1..pl.
inline GenusClass l_class(unsigned l) {
  auto poly = multiplicative_sequence(genus_series(GenusKind::L, 2 * l), l, class_names("p", l),
                                      RootMode::pontryagin);
  return {GenusKind::L, l, poly, 4 * l};
}

/// Dirac (A-hat) genus through degree 4l, in p1..pl.
inline GenusClass a_hat_class(unsigned l) {
  auto poly = multiplicative_sequence(genus_series(GenusKind::A_hat, 2 * l), l, class_names("p", l),
                                      RootMode::pontryagin);
  return {GenusKind::A_hat, l, poly, 4 * l};
}

/// Todd class of complex dimension n, in c1..cn.
inline GenusClass todd_class(unsigned n) {
  auto poly = multiplicative_sequence(genus_series(GenusKind::Todd, n), n, class_names("c", n),
                                      RootMode::chern);
  return {GenusKind::Todd, n, poly, 2 * n};
}

inline GenusClass genus_class(GenusKind kind, unsigned half_dim) {
  switch (kind) {
    case GenusKind::L: return l_class(half_dim);
    case GenusKind::A_hat: return a_hat_class(half_dim);
    case GenusKind::Todd: return todd_class(half_dim);
    case GenusKind::Exp: break;
  }
  throw Error("the exponential series does not define a genus class");
}

/// Components of a total class of degree step, 2*step, ..., up to count.
inline std::vector<GradedPolynomial> graded_components(const GradedPolynomial& total, unsigned step,
                                                       unsigned count) {
  std::vector<GradedPolynomial> out;
  for (unsigned k = 1; k <= count; ++k) out.push_back(total.homogeneous(k * step));
  return out;
}

/// ch(V) = rank + sum_k s_k / k!, with power sums s_k of the formal roots from Newton's identities.
inline ChernCharacter chern_character(unsigned rank, const std::vector<GradedPolynomial>& chern_classes,
                                      const Basis& basis) {
  for (std::size_t i = 0; i < chern_classes.size(); ++i) {
    const auto& c = chern_classes[i];
    if (!(c.basis() == basis)) throw BasisMismatch("chern class c" + std::to_string(i + 1) + " over another basis");
    if (!c.is_homogeneous(2 * static_cast<unsigned>(i + 1)))
      throw Error("chern class c" + std::to_string(i + 1) + " is not of pure degree " + std::to_string(2 * (i + 1)));
  }
  const unsigned top = basis.truncation / 2;
  auto e = [&](unsigned k) {
    return k <= chern_classes.size() ? chern_classes[k - 1] : GradedPolynomial(basis);
  };
  std::vector<GradedPolynomial> s{GradedPolynomial::constant(basis, Rational(rank))};
  GradedPolynomial ch = s[0];
  for (unsigned k = 1; k <= top; ++k) {
    GradedPolynomial sk = e(k) * Rational(k % 2 == 1 ? static_cast<long long>(k) : -static_cast<long long>(k));
    for (unsigned i = 1; i < k; ++i) sk += e(i) * s[k - i] * Rational(i % 2 == 1 ? 1 : -1);
    ch += sk * Rational(1, factorial(k));
    s.push_back(std::move(sk));
  }
  return {rank, ch};
}

/// Pontryagin classes p_1..p_{real_dim/4} of the realification: sum (-1)^k p_k = c(x) c(-x).
inline std::vector<GradedPolynomial> chern_to_pontryagin(const std::vector<GradedPolynomial>& chern_classes,
                                                         unsigned real_dim) {
  if (chern_classes.empty()) return {};
  const Basis& basis = chern_classes.front().basis();
  GradedPolynomial c = GradedPolynomial::constant(basis, 1);
  GradedPolynomial c_bar = c;
  for (std::size_t i = 0; i < chern_classes.size(); ++i) {
    if (!(chern_classes[i].basis() == basis)) throw BasisMismatch("chern classes over different bases");
    c += chern_classes[i];
    c_bar += chern_classes[i] * Rational(i % 2 == 0 ? -1 : 1);
  }
  const GradedPolynomial product = c * c_bar;
  std::vector<GradedPolynomial> p;
  for (unsigned k = 1; 4 * k <= real_dim; ++k) p.push_back(product.homogeneous(4 * k) * Rational(k % 2 == 0 ? 1 : -1));
  return p;
}

/// Checks that 2^l prod (x_i/2)/tanh(x_i/2) and prod x_i/tanh x_i have the same top-degree
/// (degree 2l) component in l degree-2 roots.
inline bool signature_integrand_identity_check(unsigned l) {
  if (l > 6) throw Error("signature integrand check supports l <= 6");
  const auto f = genus_series(GenusKind::L, l);
  const auto half = f.rescaled(Rational(1, 2));
  const Basis roots = Basis::uniform(class_names("x", l), 2, 2 * l);
  GradedPolynomial lhs = GradedPolynomial::constant(roots, pow(Rational(2), l));
  GradedPolynomial rhs = GradedPolynomial::constant(roots, 1);
  for (unsigned i = 0; i < l; ++i) {
    const auto x = GradedPolynomial::generator(roots, i);
    lhs *= series_of(half.coefficients(), x);
    rhs *= series_of(f.coefficients(), x);
  }
  return lhs.homogeneous(2 * l) == rhs.homogeneous(2 * l);
}

}  // namespace susyindex
