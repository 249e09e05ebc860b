#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "susyindex/descriptor_io.hpp"
#include "susyindex/manifold.hpp"

namespace susyindex {

/// Environment variable naming a directory of <name>.json descriptors that shadow the built-ins.
inline constexpr const char* kCatalogDirEnv = "SUSYINDEX_CATALOG_DIR";

namespace catalog_detail {

inline GradedPolynomial one(const Basis& b) { return GradedPolynomial::constant(b, 1); }
inline GradedPolynomial gen(const Basis& b, std::string_view name, const Rational& c = 1) {
  return GradedPolynomial::generator(b, name, c);
}

inline ManifoldDescriptor make(std::string name, unsigned dim, ManifoldKind kind, std::vector<Generator> gens) {
  ManifoldDescriptor m;
  m.name = std::move(name);
  m.real_dim = dim;
  m.kind = kind;
  m.basis = Basis(std::move(gens), dim);
  m.tangent_class = one(m.basis);
  return m;
}

inline void set_value(ManifoldDescriptor& m, std::string_view key, long long v) {
  m.evaluation[parse_monomial(m.basis, key)] = v;
}

inline BundleDescriptor line_bundle(const Basis& b, std::string name, GradedPolynomial c1) {
  return {std::move(name), 1, one(b) + c1, {}};
}

/// CP^n with hyperplane class h: c(T) = (1+h)^{n+1}, h^n -> 1.
inline DescriptorFile projective_space(unsigned n) {
  DescriptorFile f;
  auto& m = f.manifold = make("CP" + std::to_string(n), 2 * n, ManifoldKind::complex, {{"h", 2}});
  m.tangent_class = (one(m.basis) + gen(m.basis, "h")).pow(n + 1);
  set_value(m, "h^" + std::to_string(n), 1);
  return f;
}

inline std::string line_bundle_name(long long k) { return "O(" + std::to_string(k) + ")"; }

}  // namespace catalog_detail

/// Built-in descriptors with their recorded index values.
inline std::vector<DescriptorFile> builtin_catalog() {
  using namespace catalog_detail;
  std::vector<DescriptorFile> out;

  {
    auto f = projective_space(1);
    auto& m = f.manifold;
    m.expected = {{"signature", 0}, {"todd", 1}, {"ahat", 0}, {"euler", 2}};
    for (long long k = -2; k <= 3; ++k) {
      auto b = line_bundle(m.basis, line_bundle_name(k), gen(m.basis, "h", k));
      b.expected = {{"dolbeault", k + 1}, {"spin_twisted", k}};
      f.bundles.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  {
    auto f = projective_space(2);
    f.manifold.expected = {{"signature", 1}, {"todd", 1}, {"euler", 3}};
    auto b1 = line_bundle(f.manifold.basis, "O(1)", gen(f.manifold.basis, "h"));
    b1.expected = {{"dolbeault", 3}};
    auto canonical = line_bundle(f.manifold.basis, "O(-3)", gen(f.manifold.basis, "h", -3));
    canonical.expected = {{"dolbeault", 1}};
    f.bundles = {std::move(b1), std::move(canonical)};
    out.push_back(std::move(f));
  }
  {
    auto f = projective_space(3);
    f.manifold.expected = {{"signature", 0}, {"todd", 1}, {"ahat", 0}, {"euler", 4}};
    auto b1 = line_bundle(f.manifold.basis, "O(1)", gen(f.manifold.basis, "h"));
    b1.expected = {{"dolbeault", 4}};
    f.bundles.push_back(std::move(b1));
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("CP1xCP1", 4, ManifoldKind::complex, {{"a", 2}, {"b", 2}});
    m.tangent_class = (one(m.basis) + gen(m.basis, "a", 2)) * (one(m.basis) + gen(m.basis, "b", 2));
    set_value(m, "a^2", 0);
    set_value(m, "a·b", 1);
    set_value(m, "b^2", 0);
    m.expected = {{"signature", 0}, {"todd", 1}, {"ahat", 0}, {"euler", 4}};
    auto b = line_bundle(m.basis, "O(1,1)", gen(m.basis, "a") + gen(m.basis, "b"));
    b.expected = {{"dolbeault", 4}};
    f.bundles.push_back(std::move(b));
    out.push_back(std::move(f));
  }
  {
    // u is the generator of H^4 with <u, [K3]> = 1; c1 = 0, c2 = 24u.
    DescriptorFile f;
    auto& m = f.manifold = make("K3", 4, ManifoldKind::complex, {{"u", 4}});
    m.tangent_class = one(m.basis) + gen(m.basis, "u", 24);
    set_value(m, "u", 1);
    m.expected = {{"signature", -16}, {"todd", 2}, {"ahat", 2}, {"euler", 24}};
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("T2", 2, ManifoldKind::complex, {{"u", 2}});
    set_value(m, "u", 1);
    m.expected = {{"signature", 0}, {"todd", 0}, {"ahat", 0}, {"euler", 0}};
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("T4", 4, ManifoldKind::complex, {{"u", 4}});
    set_value(m, "u", 1);
    m.expected = {{"signature", 0}, {"todd", 0}, {"ahat", 0}, {"euler", 0}};
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("S2", 2, ManifoldKind::oriented_real, {{"u", 2}});
    set_value(m, "u", 1);
    m.euler_class = gen(m.basis, "u", 2);
    m.expected = {{"signature", 0}, {"ahat", 0}, {"euler", 2}};
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("S4", 4, ManifoldKind::oriented_real, {{"u", 4}});
    set_value(m, "u", 1);
    m.euler_class = gen(m.basis, "u", 2);
    m.expected = {{"signature", 0}, {"ahat", 0}, {"euler", 2}};
    out.push_back(std::move(f));
  }
  {
    DescriptorFile f;
    auto& m = f.manifold = make("CP2xCP2", 8, ManifoldKind::complex, {{"a", 2}, {"b", 2}});
    m.tangent_class = (one(m.basis) + gen(m.basis, "a")).pow(3) * (one(m.basis) + gen(m.basis, "b")).pow(3);
    for (const char* key : {"a^4", "a^3·b", "a·b^3", "b^4"}) set_value(m, key, 0);
    set_value(m, "a^2·b^2", 1);
    m.expected = {{"signature", 1}, {"todd", 1}, {"euler", 9}};
    out.push_back(std::move(f));
  }
  for (auto& f : out) {
    f.manifold.validate();
    for (const auto& b : f.bundles) b.validate(f.manifold.basis);
  }
  return out;
}

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline std::optional<DescriptorFile> find_builtin(const std::string& name) {
  for (auto& f : builtin_catalog())
    if (lowercase(f.manifold.name) == lowercase(name)) return f;
  return std::nullopt;
}

/// A path to a descriptor file, a <name>.json in $SUSYINDEX_CATALOG_DIR, or a built-in name.
inline DescriptorFile resolve_manifold(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  const fs::path path(name_or_path);
  if (path.has_extension() || name_or_path.find('/') != std::string::npos) return load_descriptor(path);
  if (const char* dir = std::getenv(kCatalogDirEnv); dir != nullptr && *dir != '\0') {
    for (const auto& candidate : {fs::path(dir) / (name_or_path + ".json"), fs::path(dir) / (lowercase(name_or_path) + ".json")})
      if (fs::exists(candidate)) return load_descriptor(candidate);
  }
  if (auto f = find_builtin(name_or_path)) return *f;
  throw DescriptorError("manifold", "unknown manifold '" + name_or_path + "'");
}

/// Built-ins, with every *.json in $SUSYINDEX_CATALOG_DIR added or replacing the built-in of the same name.
inline std::vector<DescriptorFile> active_catalog() {
  namespace fs = std::filesystem;
  std::vector<DescriptorFile> out = builtin_catalog();
  const char* dir = std::getenv(kCatalogDirEnv);
  if (dir == nullptr || *dir == '\0' || !fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    DescriptorFile f = load_descriptor(path);
    auto same = [&](const DescriptorFile& g) { return lowercase(g.manifold.name) == lowercase(f.manifold.name); };
    if (auto it = std::find_if(out.begin(), out.end(), same); it != out.end()) *it = std::move(f);
    else out.push_back(std::move(f));
  }
  return out;
}

/// "trivial", "trivial:<rank>", a bundle named in the descriptor, or "O(k)" over a
/// manifold with a degree-2 generator h.
inline BundleDescriptor resolve_bundle(const DescriptorFile& file, const std::string& name) {
  const Basis& basis = file.manifold.basis;
  if (name == "trivial") return BundleDescriptor::trivial(basis);
  if (name.rfind("trivial:", 0) == 0) {
    const auto rank = std::stoul(name.substr(8));
    return BundleDescriptor::trivial(basis, static_cast<unsigned>(rank));
  }
  if (const auto* b = file.find_bundle(name)) return *b;
  if (name.size() > 3 && name.rfind("O(", 0) == 0 && name.back() == ')') {
    for (const auto& g : basis.generators) {
      if (g.name != "h" || g.degree != 2) continue;
      const long long k = std::stoll(name.substr(2, name.size() - 3));
      return catalog_detail::line_bundle(basis, name, GradedPolynomial::generator(basis, "h", k));
    }
  }
  throw DescriptorError("bundle", "unknown bundle '" + name + "' over " + file.manifold.name);
}

}  // namespace susyindex
