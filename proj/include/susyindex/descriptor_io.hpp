#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "susyindex/errors.hpp"
#include "susyindex/manifold.hpp"

namespace susyindex {

inline constexpr int kDescriptorSchemaVersion = 1;

/// A manifold descriptor together with the bundles defined over it.
struct DescriptorFile {
  int schema_version = kDescriptorSchemaVersion;
  ManifoldDescriptor manifold;
  std::vector<BundleDescriptor> bundles;

  const BundleDescriptor* find_bundle(std::string_view name) const {
    for (const auto& b : bundles)
      if (b.name == name) return &b;
    return nullptr;
  }
};

namespace io {

using nlohmann::json;

inline const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw DescriptorError(path + key, "required field is missing");
  return j.at(key);
}

inline json polynomial_to_json(const GradedPolynomial& p) {
  json out = json::object();
  for (const auto& [m, c] : p.terms()) out[p.monomial_key(m.exponents)] = c.fraction_str();
  return out;
}

inline GradedPolynomial polynomial_from_json(const json& j, const Basis& basis, const std::string& field) {
  if (!j.is_object()) throw DescriptorError(field, "expected an object of monomial -> \"num/den\"");
  GradedPolynomial p(basis);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw DescriptorError(field, "coefficient of '" + key + "' must be a \"num/den\" string");
    std::vector<unsigned> exps;
    Rational c;
    try {
      exps = parse_monomial(basis, key);
      c = Rational::parse(value.get<std::string>());
    } catch (const DescriptorError&) {
      throw;
    } catch (const Error& e) {
      throw DescriptorError(field, e.what());
    }
    if (basis.degree_of(exps) > basis.truncation)
      throw DescriptorError(field, "monomial '" + key + "' exceeds the manifold dimension");
    p.add_term(exps, c);
  }
  return p;
}

inline json integer_map_to_json(const std::map<std::string, Integer>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v.convert_to<long long>();
  return out;
}

inline std::map<std::string, Integer> integer_map_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw DescriptorError(field, "expected an object of integers");
  std::map<std::string, Integer> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw DescriptorError(field + "." + k, "expected an integer");
    out[k] = Integer(v.get<long long>());
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace io

inline nlohmann::json descriptor_to_json(const DescriptorFile& file) {
  using io::json;
  const auto& m = file.manifold;
  json gens = json::array();
  for (const auto& g : m.basis.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  json evaluation = json::object();
  for (const auto& [exps, v] : m.evaluation) evaluation[m.tangent_class.monomial_key(exps)] = v.convert_to<long long>();

  json manifold = {{"name", m.name},
                   {"real_dim", m.real_dim},
                   {"kind", std::string(to_string(m.kind))},
                   {"generators", gens},
                   {"evaluation", evaluation},
                   {"tangent_class", io::polynomial_to_json(m.tangent_class)}};
  if (m.euler_class) manifold["euler_class"] = io::polynomial_to_json(*m.euler_class);
  if (!m.expected.empty()) manifold["expected"] = io::integer_map_to_json(m.expected);

  json bundles = json::object();
  for (const auto& b : file.bundles) {
    json entry = {{"rank", b.rank}, {"total_chern", io::polynomial_to_json(b.total_chern)}};
    if (!b.expected.empty()) entry["expected"] = io::integer_map_to_json(b.expected);
    bundles[b.name] = entry;
  }
  return {{"schema_version", file.schema_version}, {"manifold", manifold}, {"bundles", bundles}};
}

/// Canonical serialized form: sorted keys, two-space indent, trailing newline.
inline std::string save_descriptor(const DescriptorFile& file) { return descriptor_to_json(file).dump(2) + "\n"; }

inline DescriptorFile descriptor_from_json(const nlohmann::json& root) {
  using io::json;
  using io::require;
  const auto& version = require(root, "schema_version", "");
  if (!version.is_number_integer() || version.get<long long>() != kDescriptorSchemaVersion)
    throw DescriptorError("schema_version", "unsupported schema version " + version.dump());

  DescriptorFile file;
  const auto& jm = require(root, "manifold", "");
  auto& m = file.manifold;

  const auto& name = require(jm, "name", "manifold.");
  if (!name.is_string()) throw DescriptorError("manifold.name", "expected a string");
  m.name = name.get<std::string>();

  const auto& dim = require(jm, "real_dim", "manifold.");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0 || dim.get<long long>() % 2 != 0)
    throw DescriptorError("manifold.real_dim", "must be an even positive integer");
  m.real_dim = dim.get<unsigned>();

  const auto& kind = require(jm, "kind", "manifold.");
  if (kind == "complex") m.kind = ManifoldKind::complex;
  else if (kind == "oriented_real") m.kind = ManifoldKind::oriented_real;
  else throw DescriptorError("manifold.kind", "expected \"complex\" or \"oriented_real\"");

  std::vector<Generator> gens;
  const auto& jg = require(jm, "generators", "manifold.");
  if (!jg.is_array()) throw DescriptorError("manifold.generators", "expected an array");
  for (const auto& g : jg) {
    const auto& gname = require(g, "name", "manifold.generators[].");
    const auto& gdeg = require(g, "degree", "manifold.generators[].");
    if (!gname.is_string() || !gdeg.is_number_integer())
      throw DescriptorError("manifold.generators", "each generator needs a string name and integer degree");
    const long long d = gdeg.get<long long>();
    if (d <= 0 || d % 2 != 0)
      throw DescriptorError("manifold.generators", "odd generator degree " + std::to_string(d) + " for '" +
                                                       gname.get<std::string>() + "'");
    gens.push_back({gname.get<std::string>(), static_cast<unsigned>(d)});
  }
  m.basis = Basis(gens, m.real_dim);

  const auto& je = require(jm, "evaluation", "manifold.");
  if (!je.is_object() || je.empty())
    throw DescriptorError("manifold.evaluation", "top-degree monomial table is missing or empty");
  for (const auto& [key, value] : je.items()) {
    if (!value.is_number_integer()) throw DescriptorError("manifold.evaluation", "value of '" + key + "' must be an integer");
    std::vector<unsigned> exps;
    try {
      exps = parse_monomial(m.basis, key);
    } catch (const Error& e) {
      throw DescriptorError("manifold.evaluation", e.what());
    }
    m.evaluation[exps] = Integer(value.get<long long>());
  }

  m.tangent_class = io::polynomial_from_json(require(jm, "tangent_class", "manifold."), m.basis, "manifold.tangent_class");
  if (jm.contains("euler_class"))
    m.euler_class = io::polynomial_from_json(jm.at("euler_class"), m.basis, "manifold.euler_class");
  if (jm.contains("expected")) m.expected = io::integer_map_from_json(jm.at("expected"), "manifold.expected");
  try {
    m.validate();
  } catch (const DescriptorError& e) {
    throw DescriptorError("manifold." + e.field, e.message);
  }

  if (root.contains("bundles")) {
    const auto& jb = root.at("bundles");
    if (!jb.is_object()) throw DescriptorError("bundles", "expected an object of named bundles");
    for (const auto& [bname, entry] : jb.items()) {
      const std::string path = "bundles." + bname + ".";
      BundleDescriptor b;
      b.name = bname;
      const auto& rank = require(entry, "rank", path);
      if (!rank.is_number_integer() || rank.get<long long>() < 0) throw DescriptorError(path + "rank", "must be a non-negative integer");
      b.rank = rank.get<unsigned>();
      b.total_chern = io::polynomial_from_json(require(entry, "total_chern", path), m.basis, path + "total_chern");
      if (entry.contains("expected")) b.expected = io::integer_map_from_json(entry.at("expected"), path + "expected");
      try {
        b.validate(m.basis);
      } catch (const DescriptorError& e) {
        throw DescriptorError(path + e.field, e.message);
      }
      file.bundles.push_back(std::move(b));
    }
  }
  return file;
}

/// Parses descriptor text; parse errors report line and column.
inline DescriptorFile parse_descriptor(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = io::line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw DescriptorError("", "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                  e.what());
  }
  try {
    return descriptor_from_json(root);
  } catch (const nlohmann::json::exception& e) {
    throw DescriptorError("", e.what());
  }
}

inline DescriptorFile load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError("", "cannot open descriptor file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str());
}

}  // namespace susyindex
