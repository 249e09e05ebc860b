#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "susyindex/errors.hpp"
#include "susyindex/genera.hpp"
#include "susyindex/manifold.hpp"

namespace susyindex {

enum class ComplexKind { signature, dolbeault, spin, spin_twisted, de_rham };

inline std::string_view to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::signature: return "signature";
    case ComplexKind::dolbeault: return "dolbeault";
    case ComplexKind::spin: return "spin";
    case ComplexKind::spin_twisted: return "spin_twisted";
    case ComplexKind::de_rham: return "de_rham";
  }
  return "?";
}

struct IndexReport {
  ComplexKind complex_kind = ComplexKind::signature;
  std::string manifold;
  std::string bundle;  // empty when untwisted
  Rational value;
  Integer integer_value;
  GradedPolynomial density;
};

/// Pairs the top-degree part of `poly` with the fundamental class of M.
inline Rational evaluate(const GradedPolynomial& poly, const ManifoldDescriptor& m) {
  if (!(poly.basis() == m.basis))
    throw BasisMismatch("polynomial is not expressed in the generators of " + m.name);
  Rational total(0);
  for (const auto& [mono, c] : poly.terms()) {
    if (mono.degree != m.real_dim) continue;
    auto it = m.evaluation.find(mono.exponents);
    if (it == m.evaluation.end())
      throw DescriptorError("evaluation", "no value for top-degree monomial " + poly.monomial_key(mono.exponents) +
                                              " on " + m.name);
    total += c * Rational(it->second);
  }
  return total;
}

/// c_1..c_n of TM for a complex descriptor.
inline std::vector<GradedPolynomial> chern_classes(const ManifoldDescriptor& m) {
  if (m.kind != ManifoldKind::complex) throw Unsupported(m.name + " is not a complex manifold");
  return graded_components(m.tangent_class, 2, m.real_dim / 2);
}

/// p_1..p_{m/4} of TM, converted from Chern data for complex descriptors.
inline std::vector<GradedPolynomial> pontryagin_classes(const ManifoldDescriptor& m) {
  if (m.kind == ManifoldKind::complex) {
    auto p = chern_to_pontryagin(chern_classes(m), m.real_dim);
    return p;
  }
  return graded_components(m.tangent_class, 4, m.real_dim / 4);
}

namespace detail {

inline IndexReport make_report(ComplexKind kind, const ManifoldDescriptor& m, std::string bundle,
                               GradedPolynomial density, Rational value) {
  if (!value.is_integer())
    throw IntegralityError(std::string(to_string(kind)) + " index of " + m.name + " evaluates to " + value.str() +
                           ", not an integer: inconsistent descriptor");
  IndexReport r;
  r.complex_kind = kind;
  r.manifold = m.name;
  r.bundle = std::move(bundle);
  r.integer_value = value.numerator();
  r.value = std::move(value);
  r.density = std::move(density);
  return r;
}

/// A genus class in p1..pl (or c1..cn) pulled back to M's generators.
inline GradedPolynomial pull_back(const GenusClass& g, const std::vector<GradedPolynomial>& classes,
                                  const ManifoldDescriptor& m) {
  std::vector<GradedPolynomial> images;
  for (std::size_t k = 0; k < g.polynomial.basis().size(); ++k)
    images.push_back(k < classes.size() ? classes[k] : GradedPolynomial(m.basis));
  return g.polynomial.substitute(images, m.basis);
}

inline GradedPolynomial bundle_character(const ManifoldDescriptor& m, const BundleDescriptor& v) {
  v.validate(m.basis);
  return chern_character(v.rank, graded_components(v.total_chern, 2, m.real_dim / 2), m.basis).polynomial;
}

}  // namespace detail

/// <L(TM), [M]>; identically 0 when m = 2 mod 4.
inline IndexReport signature_index(const ManifoldDescriptor& m) {
  const auto density = detail::pull_back(l_class(m.real_dim / 4), pontryagin_classes(m), m);
  if (m.real_dim % 4 == 2) return detail::make_report(ComplexKind::signature, m, "", density, Rational(0));
  return detail::make_report(ComplexKind::signature, m, "", density, evaluate(density, m));
}

/// <Td(TM) ch(V), [M]> for a complex manifold.
inline IndexReport dolbeault_index(const ManifoldDescriptor& m, const BundleDescriptor& v) {
  if (m.kind != ManifoldKind::complex) throw Unsupported("dolbeault index needs a complex manifold; " + m.name + " is real");
  const auto todd = detail::pull_back(todd_class(m.real_dim / 2), chern_classes(m), m);
  const auto density = todd * detail::bundle_character(m, v);
  return detail::make_report(ComplexKind::dolbeault, m, v.name, density, evaluate(density, m));
}

inline IndexReport dolbeault_index(const ManifoldDescriptor& m) {
  return dolbeault_index(m, BundleDescriptor::trivial(m.basis));
}

/// <A-hat(TM) ch(V), [M]>: gravitational density times gauge density.
inline IndexReport spin_index(const ManifoldDescriptor& m, const std::optional<BundleDescriptor>& v = std::nullopt) {
  auto density = detail::pull_back(a_hat_class(m.real_dim / 4), pontryagin_classes(m), m);
  if (!v) return detail::make_report(ComplexKind::spin, m, "", density, evaluate(density, m));
  density = density * detail::bundle_character(m, *v);
  return detail::make_report(ComplexKind::spin_twisted, m, v->name, density, evaluate(density, m));
}

/// <e(TM), [M]> = Euler characteristic.
inline IndexReport de_rham_euler(const ManifoldDescriptor& m) {
  GradedPolynomial density(m.basis);
  if (m.kind == ManifoldKind::complex) density = m.tangent_class.homogeneous(m.real_dim);
  else if (m.euler_class) density = *m.euler_class;
  else throw Unsupported("euler characteristic of real manifold " + m.name + " needs an explicit euler_class");
  return detail::make_report(ComplexKind::de_rham, m, "", density, evaluate(density, m));
}

struct ConsistencyReport {
  bool consistent = false;
  Integer via_pontryagin;   // <L(p(c)), [M]>
  Integer via_chern_roots;  // <prod x_i / tanh x_i over Chern roots, [M]>
  std::optional<Integer> recorded;
};

/// Signature of a complex manifold two ways, checked against the recorded value if any.
inline ConsistencyReport hirzebruch_consistency(const ManifoldDescriptor& m) {
  if (m.kind != ManifoldKind::complex || m.real_dim % 4 != 0)
    throw Unsupported("hirzebruch consistency needs a complex manifold of real dimension 0 mod 4");
  ConsistencyReport r;
  r.via_pontryagin = signature_index(m).integer_value;

  const unsigned n = m.real_dim / 2;
  GenusClass in_roots{GenusKind::L, n,
                      multiplicative_sequence(genus_series(GenusKind::L, n), n, class_names("c", n), RootMode::chern),
                      2 * n};
  const auto density = detail::pull_back(in_roots, chern_classes(m), m);
  r.via_chern_roots = detail::make_report(ComplexKind::signature, m, "", density, evaluate(density, m)).integer_value;

  if (auto it = m.expected.find("signature"); it != m.expected.end()) r.recorded = it->second;
  r.consistent = r.via_pontryagin == r.via_chern_roots && (!r.recorded || *r.recorded == r.via_pontryagin);
  return r;
}

}  // namespace susyindex
