// susyindex-cli: characteristic classes, index evaluation, regularized determinants
// and the verification suite from the command line.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or descriptor error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acceptance/criteria.hpp"
#include "susyindex/susyindex.hpp"

namespace {

using nlohmann::json;
using namespace susyindex;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json terms_json(const GradedPolynomial& p) {
  json j = json::object();
  for (const auto& [m, c] : p.terms()) j[p.monomial_key(m.exponents)] = c.fraction_str();
  return j;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

// ---- genus ---------------------------------------------------------------

struct GenusArgs {
  std::string kind;
  unsigned half_dim = 0;
};

GenusKind parse_genus_kind(const std::string& s) {
  if (s == "L") return GenusKind::L;
  if (s == "Ahat" || s == "A_hat") return GenusKind::A_hat;
  if (s == "Todd") return GenusKind::Todd;
  throw CLI::ValidationError("--kind", "expected L, Ahat or Todd");
}

int run_genus(const GenusArgs& a, bool as_json) {
  const GenusClass g = genus_class(parse_genus_kind(a.kind), a.half_dim);
  json j{{"kind", std::string(to_string(g.kind))},
         {"half_dim", g.half_dim},
         {"truncation", g.truncation},
         {"polynomial", g.polynomial.str()},
         {"terms", terms_json(g.polynomial)}};
  emit(as_json, j, g.polynomial.str() + "\n");
  return kOk;
}

// ---- index ---------------------------------------------------------------

struct IndexArgs {
  std::string manifold;
  std::string complex;
  std::string bundle;
  bool show_density = false;
};

int run_index(const IndexArgs& a, bool as_json) {
  const DescriptorFile file = resolve_manifold(a.manifold);
  const ManifoldDescriptor& m = file.manifold;
  std::optional<BundleDescriptor> bundle;
  if (!a.bundle.empty()) {
    if (a.complex == "signature" || a.complex == "euler")
      throw CLI::ValidationError("--bundle", "the " + a.complex + " complex takes no bundle");
    bundle = resolve_bundle(file, a.bundle);
  }

  IndexReport r;
  if (a.complex == "signature") r = signature_index(m);
  else if (a.complex == "euler") r = de_rham_euler(m);
  else if (a.complex == "dolbeault") r = bundle ? dolbeault_index(m, *bundle) : dolbeault_index(m);
  else r = spin_index(m, bundle);

  json j{{"complex", std::string(to_string(r.complex_kind))},
         {"manifold", r.manifold},
         {"bundle", r.bundle},
         {"value", r.value.str()},
         {"integer_value", r.integer_value.str()},
         {"density", r.density.str()}};
  std::string text = r.integer_value.str() + "\n";
  if (a.show_density) text += "density: " + r.density.str() + "\n";
  emit(as_json, j, text);
  return kOk;
}

// ---- detreg --------------------------------------------------------------

struct DetregArgs {
  std::string op;
  double beta = 1.0;
  double param = 0.0;
  long long modes = susyindex::acceptance::kOracleModes;
  bool no_prime = false;
};

int run_detreg(const DetregArgs& a, bool as_json) {
  if (a.modes < 1) throw CLI::ValidationError("--oracle-modes", "must be at least 1");
  zeta::RegularizedDet r;
  if (a.op == "fermion_partition") {
    // Tr e^{-beta H} = Det_APBC(d/dt + w): closed form from the trace, oracle from the product.
    const zeta::OperatorSpec spec{zeta::OperatorKind::apbc_first_order_shifted, a.beta, a.param, true};
    r.spec = spec;
    r.closed_form = zeta::fermion_partition(a.param, a.beta);
    r.oracle_value = zeta::oracle_product(spec, a.modes);
    r.oracle_modes = a.modes;
    r.tolerance = zeta::oracle_tolerance(spec, r.closed_form, a.modes);
  } else {
    zeta::OperatorSpec spec{zeta::parse_operator_kind(a.op), a.beta, a.param, !a.no_prime};
    r = zeta::regularize(spec, a.modes);
  }
  json j{{"op", a.op},
         {"beta", a.beta},
         {"param", a.param},
         {"prime", r.spec.prime},
         {"closed", r.closed_form},
         {"oracle", r.oracle_value},
         {"oracle_modes", r.oracle_modes},
         {"delta", r.delta()},
         {"tolerance", r.tolerance},
         {"within_tolerance", r.within_tolerance()}};
  std::string text = "closed=" + fmt(r.closed_form) + "\n" + "oracle=" + fmt(r.oracle_value) + "\n" +
                     "delta=" + fmt(r.delta()) + "\n" + "tolerance=" + fmt(r.tolerance) + "\n" +
                     "within_tolerance=" + (r.within_tolerance() ? "true" : "false") + "\n";
  emit(as_json, j, text);
  return r.within_tolerance() ? kOk : kCheckFailed;
}

// ---- fermion-checks ------------------------------------------------------

int run_fermion_checks(unsigned max_n, bool as_json) {
  if (max_n < 1 || max_n > 5) throw CLI::ValidationError("--max-n", "must be in 1..5");
  using clifford::GammaMatrix;
  json rows = json::array();
  std::string text;
  bool all_ok = true;
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto rep = clifford::build_gamma(n);
    const GammaMatrix chi = clifford::chirality(rep);
    const bool relations = clifford::clifford_relations_hold(rep);
    const GaussianInt tr = chi.trace();
    const GaussianInt tr2 = (chi * chi).trace();
    const GaussianRational norm = clifford::normalization_psi2(n);
    const GaussianRational want = GaussianRational::i_pow(n);
    const bool ok = relations && tr == GaussianInt(0) && tr2 == GaussianInt(std::int64_t{1} << n) && norm == want;
    all_ok = all_ok && ok;
    rows.push_back({{"n", n},
                    {"clifford_relations", relations},
                    {"trace_chirality", tr.str()},
                    {"trace_chirality_squared", tr2.str()},
                    {"normalization_psi2", norm.str()},
                    {"expected_normalization", want.str()},
                    {"passed", ok}});
    text += std::string(ok ? "PASS" : "FAIL") + " n=" + std::to_string(n) +
            " clifford=" + (relations ? "ok" : "broken") + " tr_chi=" + tr.str() + " tr_chi2=" + tr2.str() +
            " N_psi2=" + norm.str() + "\n";
  }
  emit(as_json, json{{"checks", rows}, {"passed", all_ok}}, text);
  return all_ok ? kOk : kCheckFailed;
}

// ---- verify --------------------------------------------------------------

int run_verify(bool all, bool as_json) {
  const VerifyReport report = verify_catalog(active_catalog());
  json checks = json::array();
  std::string text;
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}});
    text += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + " expected=" + c.expected +
            " computed=" + c.computed + "\n";
  }
  bool ok = report.ok();
  json criteria = json::array();
  if (all) {
    for (const auto& r : acceptance::run_all()) {
      criteria.push_back({{"id", r.id},
                          {"title", r.title},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"seconds", r.seconds},
                          {"limit_seconds", r.limit_seconds}});
      text += acceptance::format_line(r) + "\n";
      ok = ok && r.passed;
    }
  }
  text += std::to_string(report.passed()) + "/" + std::to_string(report.checks.size()) + " catalog checks passed";
  if (all) text += "; acceptance " + std::string(ok ? "passed" : "failed");
  text += "\n";
  json j{{"catalog_checks", checks}, {"passed", ok}};
  if (all) j["criteria"] = criteria;
  emit(as_json, j, text);
  return ok ? kOk : kCheckFailed;
}

// ---- catalog -------------------------------------------------------------

int run_catalog(const std::string& export_dir, bool as_json) {
  const auto files = active_catalog();
  json rows = json::array();
  std::string text;
  for (const auto& f : files) {
    const auto& m = f.manifold;
    json bundles = json::array();
    std::string bundle_names;
    for (const auto& b : f.bundles) {
      bundles.push_back(b.name);
      bundle_names += (bundle_names.empty() ? "" : ",") + b.name;
    }
    rows.push_back({{"name", m.name}, {"real_dim", m.real_dim}, {"kind", std::string(to_string(m.kind))}, {"bundles", bundles}});
    text += m.name + "\t" + std::to_string(m.real_dim) + "\t" + std::string(to_string(m.kind));
    if (!bundle_names.empty()) text += "\t" + bundle_names;
    text += "\n";
  }
  json j{{"manifolds", rows}};
  if (!export_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(export_dir);
    json written = json::array();
    for (const auto& f : files) {
      const fs::path path = fs::path(export_dir) / (lowercase(f.manifold.name) + ".json");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write " + path.string());
      out << save_descriptor(f);
      written.push_back(path.string());
      text += "wrote " + path.string() + "\n";
    }
    j["written"] = written;
  }
  emit(as_json, j, text);
  return kOk;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index theorem calculator: genera, index densities, regularized determinants"};
  app.require_subcommand(1);
  std::string format = "text";

  GenusArgs genus;
  auto* genus_cmd = app.add_subcommand("genus", "Print an L, A-hat or Todd class");
  genus_cmd->add_option("--kind", genus.kind, "L, Ahat or Todd")->required()->check(CLI::IsMember({"L", "Ahat", "A_hat", "Todd"}));
  genus_cmd->add_option("--half-dim", genus.half_dim, "Number of formal roots")->required();
  add_format(genus_cmd, format);

  IndexArgs index;
  auto* index_cmd = app.add_subcommand("index", "Evaluate an index on a catalog or file descriptor");
  index_cmd->add_option("--manifold", index.manifold, "Catalog name or descriptor path")->required();
  index_cmd->add_option("--complex", index.complex, "signature, dolbeault, spin or euler")
      ->required()
      ->check(CLI::IsMember({"signature", "dolbeault", "spin", "euler"}));
  index_cmd->add_option("--bundle", index.bundle, "Twisting bundle: trivial, trivial:r, O(k) or a named bundle");
  index_cmd->add_flag("--show-density", index.show_density, "Also print the index density");
  add_format(index_cmd, format);

  DetregArgs detreg;
  auto* detreg_cmd = app.add_subcommand("detreg", "Zeta-regularized determinant: closed form against the mode product");
  detreg_cmd->add_option("--op", detreg.op, "Operator kind or fermion_partition")
      ->required()
      ->check(CLI::IsMember({"pbc_laplacian", "pbc_first_order", "apbc_first_order_shifted", "apbc_first_order",
                             "pbc_curvature_block", "apbc_curvature_block", "fermion_partition"}));
  detreg_cmd->add_option("--beta", detreg.beta, "Period")->capture_default_str();
  detreg_cmd->add_option("--param", detreg.param, "y for curvature blocks, w for first-order operators")->capture_default_str();
  detreg_cmd->add_option("--oracle-modes", detreg.modes, "Modes in the truncated product")->capture_default_str();
  detreg_cmd->add_flag("--no-prime", detreg.no_prime, "Keep the periodic zero mode");
  add_format(detreg_cmd, format);

  unsigned max_n = 5;
  auto* fermion_cmd = app.add_subcommand("fermion-checks", "Clifford relations, chirality traces, N_psi2 = i^n");
  fermion_cmd->add_option("--max-n", max_n, "Largest n (1..5)")->capture_default_str();
  add_format(fermion_cmd, format);

  bool verify_all = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the catalog's recorded values");
  verify_cmd->add_flag("--all", verify_all, "Also run every acceptance criterion");
  add_format(verify_cmd, format);

  std::string export_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog manifolds");
  catalog_cmd->add_option("--export", export_dir, "Write each descriptor as <name>.json into this directory");
  add_format(catalog_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*genus_cmd) return run_genus(genus, as_json);
    if (*index_cmd) return run_index(index, as_json);
    if (*detreg_cmd) return run_detreg(detreg, as_json);
    if (*fermion_cmd) return run_fermion_checks(max_n, as_json);
    if (*verify_cmd) return run_verify(verify_all, as_json);
    if (*catalog_cmd) return run_catalog(export_dir, as_json);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegralityError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
