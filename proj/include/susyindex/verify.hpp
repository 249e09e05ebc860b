#pragma once

#include <optional>
#include <string>
#include <vector>

#include "susyindex/catalog.hpp"
#include "susyindex/index_engine.hpp"

namespace susyindex {

struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  void add(std::string name, std::string expected, std::string computed, bool passed) {
    checks.push_back({std::move(name), std::move(expected), std::move(computed), passed});
  }
  void append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace verify_detail {

template <class F>
void check_index(VerifyReport& report, const std::string& name, const Integer& expected, F&& compute) {
  try {
    const IndexReport r = compute();
    report.add(name, expected.str(), r.integer_value.str(), r.integer_value == expected);
  } catch (const Error& e) {
    report.add(name, expected.str(), std::string("error: ") + e.what(), false);
  }
}

}  // namespace verify_detail

/// Every recorded index of a descriptor and its bundles, plus integrality and vanishing rules.
inline VerifyReport verify_descriptor(const DescriptorFile& file) {
  VerifyReport report;
  const auto& m = file.manifold;
  for (const auto& [key, value] : m.expected) {
    const std::string name = m.name + "." + key;
    if (key == "signature") verify_detail::check_index(report, name, value, [&] { return signature_index(m); });
    else if (key == "todd") verify_detail::check_index(report, name, value, [&] { return dolbeault_index(m); });
    else if (key == "ahat") verify_detail::check_index(report, name, value, [&] { return spin_index(m); });
    else if (key == "euler") verify_detail::check_index(report, name, value, [&] { return de_rham_euler(m); });
    else report.add(name, value.str(), "error: unknown expected-value key", false);
  }
  for (const auto& b : file.bundles) {
    for (const auto& [key, value] : b.expected) {
      const std::string name = m.name + "." + key + "[" + b.name + "]";
      if (key == "dolbeault") verify_detail::check_index(report, name, value, [&] { return dolbeault_index(m, b); });
      else if (key == "spin_twisted") verify_detail::check_index(report, name, value, [&] { return spin_index(m, b); });
      else report.add(name, value.str(), "error: unknown expected-value key", false);
    }
  }
  if (m.real_dim % 4 == 2) {
    verify_detail::check_index(report, m.name + ".signature_vanishes", Integer(0), [&] { return signature_index(m); });
  }
  if (m.kind == ManifoldKind::complex && m.real_dim % 4 == 0) {
    try {
      const auto c = hirzebruch_consistency(m);
      report.add(m.name + ".signature_two_routes", c.via_pontryagin.str(), c.via_chern_roots.str(), c.consistent);
    } catch (const Error& e) {
      report.add(m.name + ".signature_two_routes", "consistent", std::string("error: ") + e.what(), false);
    }
  }
  return report;
}

inline VerifyReport verify_catalog(const std::vector<DescriptorFile>& files) {
  VerifyReport report;
  for (const auto& f : files) report.append(verify_descriptor(f));
  return report;
}

}  // namespace susyindex
