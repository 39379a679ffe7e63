#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "CLI11.hpp"
#include "cyspec/errors.hpp"
#include "cyspec/milnor.hpp"
#include "cyspec/report.hpp"

namespace fs = std::filesystem;
using namespace cyspec;

namespace {

struct Flags {
  bool json = false;
  bool strict = false;
  std::string convention = "a";
  bool jacobian_only = false;
  int degree_cap = 64;
  bool mirror = false;

  RunOptions options() const {
    RunOptions o;
    o.convention = parse_convention(convention);
    o.strict = strict;
    o.mirror_elliptic_with_section = mirror;
    o.milnor.degree_cap = degree_cap;
    o.milnor.ideal = jacobian_only ? MilnorIdeal::jacobian_only : MilnorIdeal::with_function;
    return o;
  }
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--json", f.json, "print the JSON report");
  cmd->add_flag("--strict", f.strict, "warnings affect the exit code");
  cmd->add_option("--convention", f.convention, "multiple-fiber anomaly convention")
      ->check(CLI::IsMember({"a", "b", "both"}));
  cmd->add_flag("--jacobian-ideal-only", f.jacobian_only, "Milnor numbers from the Jacobian ideal alone");
  cmd->add_option("--degree-cap", f.degree_cap, "Milnor truncation degree cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--mirror-elliptic-section", f.mirror, "assert the mirror is elliptic with a section");
}

void print_errors(const RunReport& r) {
  if (r.error) std::cerr << r.model_path << ": " << *r.error << "\n";
  for (const auto& v : r.validation)
    if (v.severity == Severity::error)
      std::cerr << r.model_path << ": [" << v.rule << "] " << v.location << ": " << v.message << "\n";
}

int emit(const RunReport& r, const Flags& f, int code) {
  if (f.json) std::cout << to_json(r).dump(2) << "\n";
  else if (!r.error) std::cout << render_text(r, f.options());
  if (code == exit_code::invalid || code == exit_code::milnor_inconclusive) print_errors(r);
  return code;
}

int cmd_milnor(const std::string& poly, const std::string& file, const Flags& f) {
  std::string text = poly;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << "\n";
      return exit_code::invalid;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  PolyGerm g;
  try {
    g = parse_poly(text);
  } catch (const Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_code::invalid;
  }
  const auto opts = f.options().milnor;
  MilnorResult res;
  try {
    res = milnor_compute(g.poly, opts);
  } catch (const MilnorInconclusiveError& e) {
    if (f.json)
      std::cout << nlohmann::json{{"polynomial", to_string(g)}, {"inconclusive", e.what()}, {"degree_cap", e.degree_cap()}}.dump(2)
                << "\n";
    std::cerr << "inconclusive: " << e.what() << "\n";
    return exit_code::milnor_inconclusive;
  }
  // The other ideal, reported when it differs.
  auto other_opts = opts;
  other_opts.ideal = opts.ideal == MilnorIdeal::jacobian_only ? MilnorIdeal::with_function : MilnorIdeal::jacobian_only;
  std::optional<int> other;
  try {
    other = milnor_compute(g.poly, other_opts).value;
  } catch (const Error&) {
  }
  std::optional<int> oracle;
  const auto w = quasihomogeneous_weights(g);
  if (w) {
    try {
      oracle = milnor_quasihomogeneous(g, *w);
    } catch (const OracleInapplicableError&) {
    }
  }
  const bool jac = opts.ideal == MilnorIdeal::jacobian_only;
  if (f.json) {
    nlohmann::json j{{"polynomial", to_string(g)},
                     {"milnor", res.value},
                     {"ideal", jac ? "jacobian_only" : "with_function"},
                     {"certified_degree", res.certified_degree}};
    j[jac ? "with_function" : "jacobian_only"] = other ? nlohmann::json(*other) : nlohmann::json(nullptr);
    j["product_formula"] = oracle ? nlohmann::json(*oracle) : nlohmann::json(nullptr);
    if (w) {
      j["weights"] = nlohmann::json::array();
      for (const auto& x : *w) j["weights"].push_back(to_json_value(x));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.value << "\n";
    if (other && *other != res.value)
      std::cout << (jac ? "with f in the ideal: " : "Jacobian ideal only: ") << *other << "\n";
    if (oracle) {
      std::cout << "product formula: " << *oracle << " (weights";
      for (const auto& x : *w) std::cout << " " << to_string(x);
      std::cout << ")" << (*oracle == res.value ? "" : " MISMATCH") << "\n";
    }
  }
  return exit_code::ok;
}

int cmd_batch(const std::string& dir, const Flags& f) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "not a directory: " << dir << "\n";
    return exit_code::invalid;
  }
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());

  const auto opts = f.options();
  std::vector<std::future<RunReport>> jobs;
  for (const auto& p : files) jobs.push_back(std::async(std::launch::async, [p, opts] { return run_file(p, opts); }));

  int worst = exit_code::ok;
  nlohmann::json reports = nlohmann::json::array();
  nlohmann::json codes = nlohmann::json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto r = jobs[i].get();
    const int code = check_exit_code(r, opts);
    worst = std::max(worst, code);
    codes[files[i]] = code;
    if (f.json) {
      auto j = to_json(r);
      j["exit_code"] = code;
      reports.push_back(j);
    } else {
      std::cout << render_text(r, opts) << "  exit " << code << "\n";
    }
    if (code != exit_code::ok) print_errors(r);
  }
  if (f.json) {
    std::cout << nlohmann::json{{"reports", reports},
                                {"summary", {{"files", files.size()}, {"exit_codes", codes}, {"exit", worst}}}}
                     .dump(2)
              << "\n";
  } else {
    const auto failed = std::count_if(codes.begin(), codes.end(), [](const auto& c) { return c.template get<int>() != 0; });
    std::cout << "summary: " << files.size() << " files, " << failed << " nonzero, exit " << worst << "\n";
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massless spectrum, anomaly and bound checks for elliptic Calabi-Yau threefold models"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Flags f;
  std::string path, poly, file, dir;

  auto* spectrum = app.add_subcommand("spectrum", "compute V, T, H_unch, H_ch");
  spectrum->add_option("model", path, "model JSON file")->required();
  add_common(spectrum, f);

  auto* check = app.add_subcommand("check", "anomaly residuals and bounds; exit code reports the outcome");
  check->add_option("model", path, "model JSON file")->required();
  add_common(check, f);

  auto* bounds = app.add_subcommand("bounds", "check the rank, deformation, Mordell-Weil and multisection bounds");
  bounds->add_option("model", path, "model JSON file")->required();
  add_common(bounds, f);

  auto* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface germ at the origin");
  auto* poly_opt = milnor->add_option("--poly", poly, "polynomial text");
  auto* file_opt = milnor->add_option("--file", file, "file holding the polynomial");
  poly_opt->excludes(file_opt);
  add_common(milnor, f);

  auto* batch = app.add_subcommand("batch", "check every *.json model in a directory");
  batch->add_option("dir", dir, "directory")->required();
  add_common(batch, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::invalid;
  }

  if (milnor->parsed()) {
    if (poly.empty() && file.empty()) {
      std::cerr << "milnor: one of --poly or --file is required\n";
      return exit_code::invalid;
    }
    return cmd_milnor(poly, file, f);
  }
  if (batch->parsed()) return cmd_batch(dir, f);

  const auto opts = f.options();
  const auto r = run_file(path, opts);
  if (spectrum->parsed()) return emit(r, f, spectrum_exit_code(r));
  if (bounds->parsed()) return emit(r, f, bounds_exit_code(r, opts));
  return emit(r, f, check_exit_code(r, opts));
}
