#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "susyindex/errors.hpp"
#include "susyindex/rational.hpp"

namespace susyindex {

/// Named polynomial generator of even positive cohomological degree.
struct Generator {
  std::string name;
  unsigned degree = 2;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generator list plus the cohomological degree above which terms are discarded.
struct Basis {
  std::vector<Generator> generators;
  unsigned truncation = 0;

  Basis() = default;
  Basis(std::vector<Generator> gens, unsigned trunc) : generators(std::move(gens)), truncation(trunc) {
    for (const auto& g : generators) {
      if (g.degree == 0 || g.degree % 2 != 0)
        throw Error("generator '" + g.name + "' has odd or zero degree " + std::to_string(g.degree));
    }
  }

  /// names[0..n) all of degree `degree`.
  static Basis uniform(std::span<const std::string> names, unsigned degree, unsigned trunc) {
    std::vector<Generator> g;
    for (const auto& n : names) g.push_back({n, degree});
    return {std::move(g), trunc};
  }
  /// prefix1..prefixN with degree k*step for the k-th name: c1, c2, ... or p1, p2, ...
  static Basis graded_names(const std::string& prefix, unsigned count, unsigned step, unsigned trunc) {
    std::vector<Generator> g;
    for (unsigned k = 1; k <= count; ++k) g.push_back({prefix + std::to_string(k), k * step});
    return {std::move(g), trunc};
  }

  std::size_t size() const { return generators.size(); }
  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return i;
    throw Error("unknown generator '" + std::string(name) + "'");
  }
  unsigned degree_of(std::span<const unsigned> exps) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * generators[i].degree;
    return d;
  }

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Exponent vector keyed first by total cohomological degree, then lexicographically.
struct Monomial {
  unsigned degree = 0;
  std::vector<unsigned> exponents;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Multivariate polynomial with rational coefficients over a graded Basis, truncated by degree.
class GradedPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  GradedPolynomial() = default;
  explicit GradedPolynomial(Basis basis) : basis_(std::move(basis)) {}

  static GradedPolynomial constant(Basis basis, const Rational& c) {
    GradedPolynomial p(std::move(basis));
    p.add_term(std::vector<unsigned>(p.basis_.size(), 0), c);
    return p;
  }
  static GradedPolynomial generator(Basis basis, std::size_t index, const Rational& c = 1) {
    GradedPolynomial p(std::move(basis));
    std::vector<unsigned> e(p.basis_.size(), 0);
    e.at(index) = 1;
    p.add_term(e, c);
    return p;
  }
  static GradedPolynomial generator(Basis basis, std::string_view name, const Rational& c = 1) {
    auto i = basis.index_of(name);
    return generator(std::move(basis), i, c);
  }

  const Basis& basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exps; terms above the truncation are dropped.
  void add_term(std::vector<unsigned> exps, const Rational& c) {
    if (exps.size() != basis_.size()) throw BasisMismatch("exponent vector length does not match basis");
    if (c.is_zero()) return;
    unsigned d = basis_.degree_of(exps);
    if (d > basis_.truncation) return;
    Monomial key{d, std::move(exps)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Rational coefficient(const std::vector<unsigned>& exps) const {
    auto it = terms_.find(Monomial{basis_.degree_of(exps), exps});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(std::vector<unsigned>(basis_.size(), 0)); }

  /// Component of pure degree d.
  GradedPolynomial homogeneous(unsigned d) const {
    GradedPolynomial out(basis_);
    for (const auto& [m, c] : terms_)
      if (m.degree == d) out.terms_.emplace(m, c);
    return out;
  }
  bool is_homogeneous(unsigned d) const {
    for (const auto& [m, c] : terms_)
      if (m.degree != d) return false;
    return true;
  }

  /// Same polynomial over the same generators with a new truncation.
  GradedPolynomial truncated(unsigned trunc) const {
    GradedPolynomial out(Basis(basis_.generators, trunc));
    for (const auto& [m, c] : terms_)
      if (m.degree <= trunc) out.terms_.emplace(m, c);
    return out;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  GradedPolynomial& operator+=(const GradedPolynomial& o) {
    require_same_basis(o);
    for (const auto& [m, c] : o.terms_) add_term(m.exponents, c);
    return *this;
  }
  GradedPolynomial& operator-=(const GradedPolynomial& o) {
    require_same_basis(o);
    for (const auto& [m, c] : o.terms_) add_term(m.exponents, -c);
    return *this;
  }
  GradedPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) { return a *= s; }
  friend GradedPolynomial operator*(const Rational& s, GradedPolynomial a) { return a *= s; }

  /// Truncated product; both factors must share generators and truncation.
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    a.require_same_basis(b);
    GradedPolynomial out(a.basis_);
    const unsigned trunc = a.basis_.truncation;
    std::vector<unsigned> e(a.basis_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        // terms are ordered by degree, so the rest of b is too high as well
        if (ma.degree + mb.degree > trunc) break;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma.exponents[i] + mb.exponents[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  GradedPolynomial& operator*=(const GradedPolynomial& o) { return *this = *this * o; }

  GradedPolynomial pow(unsigned k) const {
    GradedPolynomial result = constant(basis_, 1);
    GradedPolynomial base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  /// Replaces generator i by images[i], all images living over `target`.
  GradedPolynomial substitute(std::span<const GradedPolynomial> images, const Basis& target) const {
    if (images.size() != basis_.size())
      throw BasisMismatch("substitution needs one image per generator");
    for (const auto& img : images)
      if (!(img.basis_ == target)) throw BasisMismatch("substitution image over a different basis");
    std::vector<std::vector<GradedPolynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned k) -> const GradedPolynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
      return cache[k];
    };
    GradedPolynomial out(target);
    for (const auto& [m, c] : terms_) {
      GradedPolynomial term = constant(target, c);
      for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (m.exponents[i] != 0) term *= power(i, m.exponents[i]);
      out += term;
    }
    return out;
  }

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// Display form of a monomial: "p1^2·p2", "1" for the constant.
  std::string monomial_str(std::span<const unsigned> exps) const {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!out.empty()) out += "·";
      out += basis_.generators[i].name;
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
  }

  /// Serialized monomial key: "h^2·a^1", generators in basis order, "1" for the constant.
  std::string monomial_key(std::span<const unsigned> exps) const {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!out.empty()) out += "·";
      out += basis_.generators[i].name + "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
  }

  /// Ascending degree, then lexicographic exponent order: "1 + 1/3·p1 + 7/45·p2 - 1/45·p1^2".
  std::string str() const {
    std::string out;
    for (const auto& [m, c] : terms_) {
      const bool negative = c.sign() < 0;
      const std::string mag = (negative ? -c : c).str();
      if (out.empty()) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      if (m.degree == 0) out += mag;
      else out += (mag == "1" ? "" : mag + "·") + monomial_str(m.exponents);
    }
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const GradedPolynomial& p) { return os << p.str(); }

 private:
  void require_same_basis(const GradedPolynomial& o) const {
    if (!(basis_ == o.basis_)) throw BasisMismatch("polynomials live over different generator bases");
  }

  Basis basis_;
  TermMap terms_;
};

/// Parses "h^2·a", "h^2*a^1" or "1" into an exponent vector over `basis`.
inline std::vector<unsigned> parse_monomial(const Basis& basis, std::string_view key) {
  std::vector<unsigned> exps(basis.size(), 0);
  if (key == "1") return exps;
  static constexpr std::string_view kDot = "·";
  while (!key.empty()) {
    std::size_t end = key.find(kDot);
    std::size_t skip = kDot.size();
    if (std::size_t star = key.find('*'); star < end) {
      end = star;
      skip = 1;
    }
    std::string_view factor = key.substr(0, end);
    key = end == std::string_view::npos ? std::string_view{} : key.substr(end + skip);
    unsigned k = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      std::string_view digits = factor.substr(caret + 1);
      if (digits.empty()) throw Error("malformed monomial exponent in '" + std::string(factor) + "'");
      k = 0;
      for (char ch : digits) {
        if (ch < '0' || ch > '9') throw Error("malformed monomial exponent in '" + std::string(factor) + "'");
        k = k * 10 + static_cast<unsigned>(ch - '0');
      }
      factor = factor.substr(0, caret);
    }
    exps[basis.index_of(factor)] += k;
  }
  return exps;
}

}  // namespace susyindex
