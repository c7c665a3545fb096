// drazin: command-line front end for the spectral-theory engine.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// I/O or parse error. DRAZIN_TOL overrides residual_atol for exploration.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drazin/chain.hpp"
#include "drazin/harness.hpp"
#include "drazin/hash.hpp"
#include "drazin/matrix.hpp"
#include "drazin/multop.hpp"
#include "drazin/profile.hpp"
#include "drazin/resolvent.hpp"

namespace {

using drazin::Complex;
using drazin::Matrix;
using drazin::ToleranceConfig;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- matrix JSON I/O: {"rows": n, "cols": m, "data": [[re, im], ...]} ------

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw UsageError("matrix JSON requires the fields rows, cols, data");
  const auto rows = j.at("rows").get<std::int64_t>();
  const auto cols = j.at("cols").get<std::int64_t>();
  if (rows < 0 || cols < 0) throw UsageError("matrix JSON: negative shape");
  const auto& data = j.at("data");
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw UsageError("matrix JSON: data length must equal rows*cols");
  Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t k = 0;
  for (const auto& cell : data) {
    if (!cell.is_array() || cell.size() != 2)
      throw UsageError("matrix JSON: every entry must be a [re, im] pair");
    const double re = cell[0].get<double>();
    const double im = cell[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw UsageError("matrix JSON: non-finite entry rejected");
    m.at(k / m.cols(), k % m.cols()) = Complex(re, im);
    ++k;
  }
  return m;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("JSON parse error in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      data.push_back({m.at(i, j).real(), m.at(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("--at expects re or re,im: " + text);
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("--at expects re or re,im: " + text);
  }
  std::string rest;
  if (in >> rest) throw UsageError("--at has trailing characters: " + text);
  return Complex(re, im);
}

ToleranceConfig env_tolerances() {
  ToleranceConfig tol;
  if (const char* env = std::getenv("DRAZIN_TOL")) {
    try {
      tol.residual_atol = std::stod(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DRAZIN_TOL is not a number: ") + env);
    }
    tol.validate();
  }
  return tol;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands -----------------------------------------------------------

int cmd_inv(const std::string& in_path) {
  const ToleranceConfig tol = env_tolerances();
  Matrix a = load_matrix(in_path);
  auto res = drazin::core::drazin_inverse(a, tol);
  const bool pass = res.residuals[0] <= tol.residual_atol &&
                    res.residuals[1] <= tol.residual_atol &&
                    res.residuals[2] <= tol.residual_atol;
  emit({{"input_hash", drazin::canonical_hash(a)},
        {"index", res.index},
        {"inverse", matrix_to_json(res.inverse)},
        {"residuals", {res.residuals[0], res.residuals[1], res.residuals[2]}},
        {"pass", pass}});
  return pass ? 0 : 1;
}

int cmd_chain(const std::string& in_path) {
  const ToleranceConfig tol = env_tolerances();
  Matrix a = load_matrix(in_path);
  auto prof = drazin::core::chain_profile(a, tol);
  emit({{"input_hash", drazin::canonical_hash(a)},
        {"dim", prof.dim},
        {"power_ranks", prof.power_ranks},
        {"nullities", prof.nullities},
        {"ascent", prof.ascent},
        {"descent", prof.descent},
        {"index", prof.index},
        {"conditioning_warning", prof.conditioning_warning}});
  return 0;
}

int cmd_poles(const std::string& in_path) {
  const ToleranceConfig tol = env_tolerances();
  Matrix a = load_matrix(in_path);
  json list = json::array();
  for (const auto& p : drazin::resolvent::poles(a, tol))
    list.push_back({{"value", {p.value.real(), p.value.imag()}}, {"order", p.order}});
  emit({{"input_hash", drazin::canonical_hash(a)}, {"poles", list}});
  return 0;
}

int cmd_laurent(const std::string& in_path, const std::string& at, std::size_t nodes,
                double radius_frac) {
  const ToleranceConfig tol = env_tolerances();
  Matrix a = load_matrix(in_path);
  const Complex lambda0 = parse_complex(at);
  drazin::resolvent::ContourConfig contour;
  contour.nodes = nodes;
  contour.radius_fraction = radius_frac;
  contour.validate();
  auto exp = drazin::resolvent::laurent_algebraic(a, lambda0, tol, contour);
  json principal = json::array();
  for (const auto& coeff : exp.principal) principal.push_back(matrix_to_json(coeff));
  emit({{"input_hash", drazin::canonical_hash(a)},
        {"center", {exp.center.real(), exp.center.imag()}},
        {"pole_order", exp.pole_order},
        {"cross_residual", exp.cross_residual},
        {"principal", principal}});
  return 0;
}

int cmd_multop(const std::string& in_path, std::size_t lift_cap) {
  const ToleranceConfig tol = env_tolerances();
  Matrix a = load_matrix(in_path);
  auto rep = drazin::multop::transfer_index_check(a, tol, lift_cap);
  emit({{"input_hash", drazin::canonical_hash(a)},
        {"index_base", rep.index_base},
        {"index_left", rep.index_left},
        {"index_right", rep.index_right},
        {"left_lift_residual", rep.left_lift_residual},
        {"right_lift_residual", rep.right_lift_residual},
        {"pass", rep.pass}});
  return rep.pass ? 0 : 1;
}

json verify_to_json(const std::string& name, const drazin::specset::VerifyReport& rep) {
  json ids = json::array();
  for (const auto& id : rep.identities)
    ids.push_back({{"name", id.name},
                   {"pass", id.pass},
                   {"undecidable", id.undecidable},
                   {"detail", id.detail}});
  return {{"entry", name}, {"identities", ids}, {"all_pass", rep.all_pass}};
}

int cmd_catalog_list() {
  json list = json::array();
  for (const auto& e : drazin::specset::catalog())
    list.push_back({{"name", e.name}, {"description", e.description}});
  emit({{"entries", list}});
  return 0;
}

int cmd_catalog_verify() {
  json results = json::array();
  bool all = true;
  for (const auto& e : drazin::specset::catalog()) {
    auto rep = drazin::specset::verify_profile(e.profile);
    all = all && rep.all_pass;
    results.push_back(verify_to_json(e.name, rep));
  }
  emit({{"results", results}, {"all_pass", all}});
  return all ? 0 : 1;
}

int cmd_catalog_verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open entry file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  drazin::specset::CatalogEntry entry;
  try {
    entry = drazin::specset::entry_from_json(buf.str());
  } catch (const std::exception& e) {
    throw UsageError("entry parse error in " + path + ": " + e.what());
  }
  auto rep = drazin::specset::verify_profile(entry.profile);
  emit(verify_to_json(entry.name, rep));
  return rep.all_pass ? 0 : 1;
}

int cmd_suite_run(const std::string& name, std::uint64_t seed,
                  const std::vector<std::size_t>& sizes, std::size_t cases_per_size,
                  const std::string& json_out) {
  drazin::harness::SuiteConfig cfg;
  cfg.seed = seed;
  if (!sizes.empty()) cfg.sizes = sizes;
  if (cases_per_size > 0) cfg.cases_per_size = cases_per_size;
  cfg.tolerances = env_tolerances();
  auto report = drazin::harness::run_suite(name, cfg);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw UsageError("cannot open output file: " + json_out);
    out << report.to_json(true) << "\n";
  }
  std::cout << "suite " << report.suite << ": " << report.total - report.failed << "/"
            << report.total << " cases passed, max residual " << report.max_residual
            << ", " << report.wall_time_seconds << " s\n";
  for (const auto& rec : report.cases) {
    if (rec.pass) continue;
    std::cout << "  FAIL ordinal " << rec.ordinal << " dim " << rec.dim << " target "
              << rec.index_target << " hash " << rec.matrix_hash << "\n";
    for (const auto& chk : rec.checks)
      if (!chk.pass)
        std::cout << "    " << chk.name << " residual " << chk.residual << "\n";
  }
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drazin/group inverses, spectral projections, Laurent data, "
               "multiplication-operator lifts, and spectral-set identity suites"};
  app.require_subcommand(1);

  std::string in_path, at_text = "0", json_out, entry_path, suite_name;
  std::size_t nodes = 64, lift_cap = drazin::multop::kDefaultLiftCap, cases_per_size = 0;
  double radius_frac = 0.5;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;

  auto* inv = app.add_subcommand("inv", "Drazin inverse and index");
  inv->add_option("--in", in_path, "matrix JSON file")->required();

  auto* chain = app.add_subcommand("chain", "ascent/descent rank chain profile");
  chain->add_option("--in", in_path, "matrix JSON file")->required();

  auto* poles = app.add_subcommand("poles", "resolvent poles with orders");
  poles->add_option("--in", in_path, "matrix JSON file")->required();

  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients at a center");
  laurent->add_option("--in", in_path, "matrix JSON file")->required();
  laurent->add_option("--at", at_text, "expansion center, re or re,im")->required();
  laurent->add_option("--nodes", nodes, "contour quadrature nodes (power of two, >= 16)");
  laurent->add_option("--radius-frac", radius_frac, "contour radius fraction in (0,1)");

  auto* multop = app.add_subcommand("multop", "lift realization and index transfer checks");
  multop->add_option("--in", in_path, "matrix JSON file")->required();
  multop->add_option("--lift-cap", lift_cap, "largest base dimension to lift");

  auto* catalog = app.add_subcommand("catalog", "spectral-profile catalog");
  auto* cat_list = catalog->add_subcommand("list", "list built-in entries");
  auto* cat_verify = catalog->add_subcommand("verify", "verify all built-in entries");
  auto* cat_verify_file =
      catalog->add_subcommand("verify-file", "verify an external entry JSON file");
  cat_verify_file->add_option("path", entry_path, "entry JSON file")->required();
  catalog->require_subcommand(1);

  auto* suite = app.add_subcommand("suite", "property-test suites");
  auto* suite_run = suite->add_subcommand("run", "run one suite");
  suite_run->add_option("--name", suite_name, "suite name")->required();
  suite_run->add_option("--seed", seed, "corpus seed");
  suite_run->add_option("--sizes", sizes, "base dimensions");
  suite_run->add_option("--cases", cases_per_size, "cases per size");
  suite_run->add_option("--json", json_out, "write the full JSON report here");
  suite->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*inv) return cmd_inv(in_path);
    if (*chain) return cmd_chain(in_path);
    if (*poles) return cmd_poles(in_path);
    if (*laurent) return cmd_laurent(in_path, at_text, nodes, radius_frac);
    if (*multop) return cmd_multop(in_path, lift_cap);
    if (*cat_list) return cmd_catalog_list();
    if (*cat_verify) return cmd_catalog_verify();
    if (*cat_verify_file) return cmd_catalog_verify_file(entry_path);
    if (*suite_run)
      return cmd_suite_run(suite_name, seed, sizes, cases_per_size, json_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const drazin::harness::UnknownSuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const drazin::Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
