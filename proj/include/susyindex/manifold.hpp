#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "susyindex/errors.hpp"
#include "susyindex/graded_polynomial.hpp"
#include "susyindex/rational.hpp"

namespace susyindex {

enum class ManifoldKind { oriented_real, complex };

inline std::string_view to_string(ManifoldKind k) { return k == ManifoldKind::complex ? "complex" : "oriented_real"; }

/// A manifold given by its characteristic-number data.
///
/// `evaluation` maps top-degree monomials in the generators to their value on
/// the fundamental class. `tangent_class` is the total Chern class of TM for
/// complex manifolds and the total Pontryagin class for oriented real ones;
/// `euler_class` is only needed for real manifolds.
struct ManifoldDescriptor {
  std::string name;
  unsigned real_dim = 0;
  ManifoldKind kind = ManifoldKind::complex;
  Basis basis;  // truncation == real_dim
  std::map<std::vector<unsigned>, Integer> evaluation;
  GradedPolynomial tangent_class;
  std::optional<GradedPolynomial> euler_class;
  std::map<std::string, Integer> expected;  // recorded index values, keyed by complex kind

  /// Throws DescriptorError naming the first violated invariant.
  void validate() const {
    if (real_dim == 0 || real_dim % 2 != 0)
      throw DescriptorError("real_dim", "must be an even positive integer, got " + std::to_string(real_dim));
    for (const auto& g : basis.generators)
      if (g.degree == 0 || g.degree % 2 != 0)
        throw DescriptorError("generators", "odd generator degree " + std::to_string(g.degree) + " for '" + g.name + "'");
    if (basis.truncation != real_dim) throw DescriptorError("generators", "basis truncation must equal real_dim");
    if (evaluation.empty()) throw DescriptorError("evaluation", "top-degree monomial table is missing or empty");
    for (const auto& [exps, value] : evaluation) {
      if (exps.size() != basis.size()) throw DescriptorError("evaluation", "monomial has wrong number of exponents");
      if (basis.degree_of(exps) != real_dim)
        throw DescriptorError("evaluation", "monomial of degree " + std::to_string(basis.degree_of(exps)) +
                                                " is not top-degree");
    }
    if (!(tangent_class.basis() == basis)) throw DescriptorError("tangent_class", "not expressed in the generator basis");
    if (tangent_class.constant_term() != Rational(1))
      throw DescriptorError("tangent_class", "degree-0 term must be 1");
    if (kind == ManifoldKind::oriented_real) {
      for (const auto& [m, c] : tangent_class.terms())
        if (m.degree % 4 != 0) throw DescriptorError("tangent_class", "pontryagin class has a degree not divisible by 4");
    }
    if (euler_class) {
      if (!(euler_class->basis() == basis)) throw DescriptorError("euler_class", "not expressed in the generator basis");
      if (!euler_class->is_homogeneous(real_dim)) throw DescriptorError("euler_class", "must be of top degree");
    }
  }
};

/// A complex vector bundle V over a manifold, given by its total Chern class.
struct BundleDescriptor {
  std::string name;
  unsigned rank = 1;
  GradedPolynomial total_chern;
  std::map<std::string, Integer> expected;

  static BundleDescriptor trivial(const Basis& basis, unsigned rank = 1) {
    return {rank == 1 ? "trivial" : "trivial:" + std::to_string(rank), rank, GradedPolynomial::constant(basis, 1), {}};
  }

  void validate(const Basis& basis) const {
    if (!(total_chern.basis() == basis)) throw DescriptorError("total_chern", "not expressed in the manifold's generators");
    if (total_chern.constant_term() != Rational(1)) throw DescriptorError("total_chern", "degree-0 term must be 1");
    for (const auto& [m, c] : total_chern.terms())
      if (m.degree / 2 > rank)
        throw DescriptorError("total_chern", "chern class c" + std::to_string(m.degree / 2) + " exceeds rank " +
                                                 std::to_string(rank));
  }
};

}  // namespace susyindex
