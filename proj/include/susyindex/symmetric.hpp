#pragma once

#include <string>
#include <utility>
#include <vector>

#include "susyindex/graded_polynomial.hpp"

namespace susyindex {

/// e_1..e_n of the generators of `roots` (all assumed to be roots of equal degree).
inline std::vector<GradedPolynomial> elementary_symmetric(const Basis& roots) {
  const std::size_t n = roots.size();
  // e_k via the product prod (1 + x_i) split by degree in the roots
  std::vector<GradedPolynomial> e(n + 1, GradedPolynomial(roots));
  e[0] = GradedPolynomial::constant(roots, 1);
  for (std::size_t i = 0; i < n; ++i) {
    GradedPolynomial xi = GradedPolynomial::generator(roots, i);
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * xi;
  }
  e.erase(e.begin());
  return e;
}

/// Throws NonSymmetric naming the first adjacent transposition that changes p.
inline void require_symmetric(const GradedPolynomial& p) {
  const auto& gens = p.basis().generators;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    for (const auto& [m, c] : p.terms()) {
      std::vector<unsigned> swapped = m.exponents;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c) throw NonSymmetric(i, i + 1, gens[i].name, gens[i + 1].name);
    }
  }
}

/// Rewrites a symmetric polynomial in equal-degree roots as a polynomial in
/// elementary symmetric classes named target_names[k-1] (degree k * root degree).
/// Leading-term elimination in lexicographic order with x_1 > x_2 > ... .
inline GradedPolynomial symmetric_reduce(const GradedPolynomial& p, std::size_t n_roots,
                                         const std::vector<std::string>& target_names) {
  const Basis& roots = p.basis();
  if (roots.size() != n_roots) throw BasisMismatch("root count does not match polynomial basis");
  if (target_names.size() < n_roots) throw Error("need one class name per root");
  const unsigned root_degree = n_roots == 0 ? 2 : roots.generators.front().degree;
  for (const auto& g : roots.generators)
    if (g.degree != root_degree) throw BasisMismatch("roots must share one degree");
  require_symmetric(p);

  std::vector<Generator> classes;
  for (std::size_t k = 0; k < n_roots; ++k)
    classes.push_back({target_names[k], static_cast<unsigned>((k + 1) * root_degree)});
  const Basis target(classes, roots.truncation);

  const auto e = elementary_symmetric(roots);
  GradedPolynomial rest = p;
  GradedPolynomial out(target);
  while (!rest.is_zero()) {
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.exponents > lead->first.exponents) lead = it;
    const std::vector<unsigned> a = lead->first.exponents;
    const Rational c = lead->second;

    std::vector<unsigned> class_exps(n_roots, 0);
    GradedPolynomial expansion = GradedPolynomial::constant(roots, c);
    for (std::size_t k = 0; k < n_roots; ++k) {
      unsigned next = k + 1 < n_roots ? a[k + 1] : 0;
      if (a[k] < next) throw NonSymmetric(k, k + 1, roots.generators[k].name, roots.generators[k + 1].name);
      class_exps[k] = a[k] - next;
      if (class_exps[k] != 0) expansion *= e[k].pow(class_exps[k]);
    }
    out.add_term(class_exps, c);
    rest -= expansion;
  }
  return out;
}

}  // namespace susyindex
