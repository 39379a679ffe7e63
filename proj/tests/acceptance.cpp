// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cyspec/anomaly.hpp"
#include "cyspec/bounds.hpp"
#include "cyspec/milnor.hpp"
#include "cyspec/report.hpp"
#include "cyspec/spectrum.hpp"
#include "table_expr.hpp"

using namespace cyspec;
namespace fs = std::filesystem;

namespace {

// Collects failed expectations of one criterion.
struct Check {
  std::vector<std::string> failures;
  int count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream ss;
    ss << what << ": got " << got << ", want " << want;
    expect(got == want, ss.str());
  }
};

std::ostream& operator<<(std::ostream& os, BoundStatus s) { return os << to_string(s); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FibrationModel fixture(const std::string& name) { return parse_model(slurp(fs::path(CYSPEC_FIXTURE_DIR) / name)); }

// 1. Every instantiated table row against the weight-system engine.
void table_oracle(Check& c) {
  const auto doc = table::load(CYSPEC_DATA_DIR "/kodaira_table.json");
  for (const auto& row : doc["rows"]) {
    const auto [var, values] = table::instances(row);
    for (int v : values) {
      const auto alg = table::algebra(row, var, v);
      const auto where = row["label"].get<std::string>() + (var.empty() ? "" : " " + var + "=" + std::to_string(v));
      const auto& cells = row["charged"];
      c.equal(charged_dim(alg, RepLabel{RepKind::adjoint}), *table::cell(cells["adjoint"], var, v), where + " adjoint");
      for (const char* col : {"rho0", "rhoQ1", "rhoQ2"}) {
        const auto rep = table::reps(row[col]);
        const auto want = table::cell(cells[col], var, v);
        if (!rep) {
          c.expect(!want || *want == 0, where + " " + col + ": value without a representation");
          continue;
        }
        c.expect(want.has_value(), where + " " + col + ": representation without a value");
        if (want) c.equal(charged_dim(alg, *rep), *want, where + " " + col);
      }
    }
  }
}

// 2. Generic Weierstrass model over P2.
void p2_fixture(Check& c) {
  const auto h = solve(Equation::grav, "H_unch", {{"V", 0}, {"T", 0}, {"H_ch", 0}});
  c.equal(h, 273, "H_unch");
  c.equal(h - 1, 272, "h21");
  const auto chi = solve(Equation::geom, "chi_top", {{"K2", 9}, {"H_ch", 0}, {"dim_minus_rank", 0}, {"sum_m", 0}});
  c.equal(chi, -540, "chi_top");

  const auto m = fixture("p2_generic.json");
  const auto s = full_spectrum(m);
  c.equal(s.H_unch_base, 273, "fixture H_unch");
  const auto a = anomaly_report(m, s);
  c.equal(a.grav_residual, 0, "grav residual");
  c.expect(a.geom_residual && *a.geom_residual == 0, "geom residual");
}

// 3. F12 with e8: the deformation bound is saturated.
void f12_fixture(Check& c) {
  const auto h = solve(Equation::grav, "H_unch", {{"V", 248}, {"T", 1}, {"H_ch", 0}});
  c.equal(h, 492, "H_unch");
  c.equal(h - 1, 491, "CxDef");
  const auto m = fixture("f12_e8.json");
  const auto s = full_spectrum(m);
  c.equal(s.V, 248, "V");
  c.equal(s.T_base, 1, "T");
  c.equal(s.H_ch, 0, "H_ch");
  c.equal(s.H_unch_base, 492, "fixture H_unch");
  const auto v = check_cxdef(m, s);
  c.equal(v.status, BoundStatus::satisfied, "cxdef status");
  c.equal(v.note, "boundary", "cxdef note");
  c.equal(v.lhs, "491", "cxdef lhs");
  c.equal(anomaly_report(m, s).grav_residual, 0, "grav residual");
}

// 4. Enriques base, trivial gauge algebra.
void enriques_fixture(Check& c) {
  const auto m = fixture("enriques.json");
  c.expect(gauge_algebra_of(m) == GaugeAlgebra{}, "gauge algebra is trivial");
  c.equal(m.base.k2, 0, "K2");
  c.equal(m.topology.chi_top.value_or(-1), 0, "chi_top");
  const auto s = full_spectrum(m);
  c.equal(s.H_ch, 0, "H_ch");
  c.equal(geometric_residual(m, s), 0, "geom residual");
}

// 5. ADE Milnor numbers, product formula, Thom-Sebastiani.
struct Germ {
  std::string name;
  std::string text;  // minimal-variable form
  std::vector<Rational> weights;
  int mu;
};

std::vector<Germ> ade_germs() {
  std::vector<Germ> out;
  for (int n = 1; n <= 10; ++n)
    out.push_back({"A" + std::to_string(n), "x^" + std::to_string(n + 1), {Rational(1, n + 1)}, n});
  for (int n = 4; n <= 8; ++n)
    out.push_back({"D" + std::to_string(n), "x^2*y+y^" + std::to_string(n - 1),
                   {Rational(n - 2, 2 * (n - 1)), Rational(1, n - 1)}, n});
  out.push_back({"E6", "x^3+y^4", {Rational(1, 3), Rational(1, 4)}, 6});
  out.push_back({"E7", "x^3+x*y^3", {Rational(1, 3), Rational(2, 9)}, 7});
  out.push_back({"E8", "x^3+y^5", {Rational(1, 3), Rational(1, 5)}, 8});
  return out;
}

Rational product_formula(const std::vector<Rational>& w) {
  Rational p = 1;
  for (const auto& x : w) p *= 1 / x - 1;
  return p;
}

void milnor_suite(Check& c) {
  const auto germs = ade_germs();
  for (const auto& g : germs) {
    // Surface singularity form: the minimal form plus squares up to three variables.
    std::string text = g.text;
    auto weights = g.weights;
    const char* extra[] = {"y", "z"};
    for (std::size_t i = g.weights.size(); i < 3; ++i) {
      text += std::string("+") + extra[i - 1] + "^2";
      weights.push_back(Rational(1, 2));
    }
    const auto germ = parse_poly(text);
    c.equal(product_formula(weights), g.mu, g.name + " product formula");
    c.equal(milnor_number(germ), g.mu, g.name + " " + text);
    const auto detected = quasihomogeneous_weights(germ);
    c.expect(detected && milnor_quasihomogeneous(germ, *detected) == g.mu, g.name + " detected-weight oracle");
  }
  for (const auto& a : germs)
    for (const auto& b : germs) {
      const auto sum = disjoint_sum(parse_poly(a.text).poly, parse_poly(b.text).poly);
      c.equal(milnor_compute(sum).value, a.mu * b.mu, a.name + " + " + b.name);
    }
}

// 6. Mordell-Weil and multisection verdicts.
void mw_fixtures(Check& c) {
  const auto rank10 = fixture("mw_rank10.json");
  c.equal(check_mw_rank(rank10).status, BoundStatus::satisfied, "rank 10, generic rational base");
  const RunOptions opts;
  c.equal(check_exit_code(run_file(std::string(CYSPEC_FIXTURE_DIR) + "/mw_rank10.json", opts), opts), exit_code::ok,
          "rank 10 fixture check");

  auto p2 = fixture("p2_generic.json");
  p2.mordell_weil = MordellWeil{25, 1, 1};
  c.equal(check_mw_rank(p2).status, BoundStatus::violated, "rank 25 on P2");
  p2.mordell_weil = MordellWeil{0, 2, 4};
  c.equal(check_mw_torsion(p2).status, BoundStatus::satisfied, "torsion (2,4)");
  p2.mordell_weil = MordellWeil{0, 5, 5};
  c.equal(check_mw_torsion(p2).status, BoundStatus::violated, "torsion (5,5)");
  p2.multisection_index = 5;
  c.equal(check_multisection_index(p2).status, BoundStatus::satisfied, "index 5");
  p2.multisection_index = 7;
  c.equal(check_multisection_index(p2).status, BoundStatus::warning, "index 7");
}

// 7. Genus-one fibration against its Jacobian.
void jacobian(Check& c) {
  c.equal(jacobian_cxdef(272, 10), 262, "jacobian_cxdef(272, 10)");
  c.equal(jacobian_cxdef(491, 0), 491, "jacobian_cxdef(491, 0)");
}

// 8. Solve/residual round trips, affine coefficients, model round trips.
void properties(Check& c) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> num(-2000, 2000), den(1, 12);
  const auto random_q = [&] { return Rational(num(rng), den(rng)); };

  for (int trial = 0; trial < 1000; ++trial) {
    const auto eq = trial % 2 ? Equation::geom : Equation::grav;
    auto names = equation_quantities(eq);
    // H replaces the H_unch + H_ch pair half of the time.
    if (eq == Equation::grav) {
      const bool total = trial % 4 == 0;
      std::erase_if(names, [&](const std::string& n) { return total ? (n == "H_unch" || n == "H_ch") : n == "H"; });
    }
    const auto unknown = names[rng() % names.size()];
    Quantities known;
    for (const auto& n : names)
      if (n != unknown) known[n] = random_q();
    const auto value = solve(eq, unknown, known);
    auto full = known;
    full[unknown] = value;
    const auto r = residual(eq, full);
    c.expect(r == 0, "round trip " + to_string(eq) + " solving " + unknown + ": residual " + to_string(r));
  }

  const std::vector<std::tuple<Equation, std::string, Rational>> coefficients = {
      {Equation::grav, "H_unch", 1}, {Equation::grav, "H_ch", 1}, {Equation::grav, "V", -1},
      {Equation::grav, "T", 29},     {Equation::grav, "nm", 1},   {Equation::geom, "K2", 30},
      {Equation::geom, "chi_top", Rational(1, 2)}, {Equation::geom, "sum_m", Rational(-1, 2)},
      {Equation::geom, "H_ch", -1},  {Equation::geom, "dim_minus_rank", 1}};
  for (int trial = 0; trial < 20; ++trial) {
    for (const auto& [eq, name, coef] : coefficients) {
      Quantities q;
      for (const auto& n : equation_quantities(eq))
        if (n != "H") q[n] = random_q();
      const Rational step = Rational(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 5));
      const auto base = residual(eq, q);
      q[name] += step;
      c.equal((residual(eq, q) - base) / step, coef, to_string(eq) + " d/d" + name);
    }
  }

  for (const auto& e : fs::directory_iterator(CYSPEC_FIXTURE_DIR)) {
    const auto m = parse_model(slurp(e.path()));
    const auto doc = serialize_model(m);
    c.expect(parse_model(doc) == m, e.path().filename().string() + " parse(serialize(m)) == m");
    c.expect(serialize_model(parse_model(doc.dump())) == doc, e.path().filename().string() + " serialize is stable");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"fiber table charged dimensions reproduced by the weight engine", table_oracle},
      {"generic P2 model: H_unch 273, chi_top -540, residuals 0", p2_fixture},
      {"F12/e8 model: H_unch 492, CxDef 491 at the boundary", f12_fixture},
      {"Enriques model: geometric residual 0", enriques_fixture},
      {"ADE Milnor numbers, product formula, Thom-Sebastiani", milnor_suite},
      {"Mordell-Weil rank/torsion and multisection verdicts", mw_fixtures},
      {"Jacobian deformation count", jacobian},
      {"solve/residual round trips, coefficients, model round trips", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << c.count << " checks, "
              << ms << " ms)\n";
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  return failed ? 1 : 0;
}
