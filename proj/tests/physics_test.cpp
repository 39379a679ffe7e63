#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>

#include "cyspec/anomaly.hpp"
#include "cyspec/bounds.hpp"
#include "cyspec/errors.hpp"
#include "cyspec/report.hpp"
#include "cyspec/spectrum.hpp"
#include "doctest.h"

using namespace cyspec;
using nlohmann::json;

namespace {

FibrationModel fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(CYSPEC_FIXTURE_DIR) / name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

json p2_doc() {
  return json::parse(R"({"base": {"kind": "p2"}, "topology": {"h11_x": 2, "b3_x": 546, "chi_top": -540}})");
}

SpectrumReport spec(std::int64_t V, std::int64_t T, Rational H) {
  SpectrumReport s;
  s.V = V;
  s.T_base = T;
  s.H_unch_base = H;
  return s;
}

BoundVerdict verdict(const std::vector<BoundVerdict>& all, const std::string& rule) {
  for (const auto& v : all)
    if (v.rule == rule) return v;
  FAIL("missing rule " << rule);
  return {};
}

}  // namespace

TEST_CASE("vector and tensor multiplets") {
  CHECK(vector_multiplets(fixture("f12_e8.json")) == 248);
  CHECK(vector_multiplets(fixture("p2_generic.json")) == 0);
  const auto mw = fixture("mw_rank10.json");
  CHECK(vector_multiplets(mw) == mw.topology.h11_x - mw.base.h11 - 1);

  CHECK(tensor_multiplets(fixture("p2_generic.json")).base == 0);
  CHECK(tensor_multiplets(fixture("p2_generic.json")).extra == 0);
  CHECK(tensor_multiplets(fixture("f12_e8.json")).base == 1);
  auto doc = json::parse(R"({"base": {"kind": "rational_with_quotient_points", "h11": 2, "k2": 2,
    "quotient_points": [{"m": 3, "count": 2}]}, "topology": {"h11_x": 3, "b3_x": 10}})");
  const auto q = parse_model(doc);
  CHECK(tensor_multiplets(q).extra == 6);
  CHECK(h_uncharged(q).extra == 2);
}

TEST_CASE("neutral hypermultiplets") {
  CHECK(h_uncharged(fixture("f12_e8.json")).base == 492);
  auto doc = p2_doc();
  doc["topology"]["b3_x"] = 4;
  CHECK(h_uncharged(parse_model(doc)).base == 2);
  doc["topology"]["b3_x"] = 544;
  doc["singularities"] = json::parse(R"([{"id": "P", "milnor": 1}])");
  CHECK(validate(parse_model(doc)).size() == 1);  // parity
}

TEST_CASE("charged hypermultiplets") {
  auto doc = p2_doc();
  doc["topology"]["h11_x"] = 4;
  doc["components"] = json::parse(R"([{"id": "g", "genus": 2, "cover_genus": 4, "fiber": "I0*", "monodromy": "non-split"}])");
  auto ch = h_charged(parse_model(doc));
  CHECK(ch.total == 36);

  CHECK(h_charged(fixture("p2_generic.json")).total == 0);

  doc["components"] = json::parse(R"([{"id": "s", "genus": 0, "fiber": "I5"}])");
  doc["topology"]["h11_x"] = 6;
  doc["matter"] = json::parse(R"([{"id": "ten", "on": ["s"], "rep": "Q1", "count": 3},
    {"id": "five", "on": ["s"], "rep": "Q2", "count": 7}])");
  ch = h_charged(parse_model(doc));
  CHECK(ch.total == 65);
  Rational sum = 0;
  for (const auto& b : ch.breakdown) sum += b.value;
  CHECK(sum == ch.total);

  // Adding a charged point strictly increases H_ch.
  doc["matter"].push_back({{"id", "more"}, {"on", {"s"}}, {"rep", "Q2"}});
  CHECK(h_charged(parse_model(doc)).total > 65);
  doc["matter"].push_back({{"id", "cq"}, {"c_q", 3}, {"count", 2}});
  CHECK(h_charged(parse_model(doc)).total == 65 + 5 + 6);
}

TEST_CASE("rho0 term vanishes for simply-laced genus-0 components") {
  for (const auto& r : enumerate_records(12)) {
    if (!simply_laced(r.algebra)) continue;
    auto doc = json::parse(R"({"base": {"kind": "hirzebruch", "n": 1}, "topology": {"h11_x": 40, "b3_x": 10}})");
    doc["components"] = json::array({{{"id", "c"}, {"genus", 0}, {"fiber", to_string(r.fiber)}, {"monodromy", to_string(r.monodromy)}}});
    for (const auto& b : h_charged(parse_model(doc)).breakdown)
      if (b.term == "rho0") CHECK(b.value == 0);
  }
}

TEST_CASE("spectrum warnings") {
  auto doc = p2_doc();
  doc["topology"]["h11_x"] = 3;
  doc["components"] = json::parse(R"([{"id": "c", "genus": 0, "cover_genus": 0, "fiber": "IV", "monodromy": "non-split"}])");
  doc["matter"] = json::parse(R"([{"id": "h", "on": ["c"], "rep": "Q1"}])");
  auto s = full_spectrum(parse_model(doc));
  CHECK(s.H_ch == 1);
  CHECK(s.warnings.empty());
  doc["topology"]["b3_x"] = 545;
  s = full_spectrum(parse_model(doc));
  CHECK(s.H_unch_base == Rational(545, 2));
  CHECK(s.warnings.size() == 1);
}

TEST_CASE("full spectrum of fixtures") {
  auto s = full_spectrum(fixture("p2_generic.json"));
  CHECK(s.V == 0);
  CHECK(s.T_base == 0);
  CHECK(s.H_unch_base == 273);
  CHECK(s.H_ch == 0);
  CHECK(s.regime == Regime::smooth);

  s = full_spectrum(fixture("f12_e8.json"));
  CHECK(s.V == 248);
  CHECK(s.T_base == 1);
  CHECK(s.H_unch_base == 492);
  CHECK(s.H_ch == 0);

  const auto e = fixture("enriques.json");
  s = full_spectrum(e);
  CHECK(s.V == e.topology.h11_x - 11);
  CHECK(s.T_base == 9);
  CHECK(s.H_ch == 0);

  // Smooth and terminal paths agree when there is nothing singular.
  const auto p2 = fixture("p2_generic.json");
  CHECK(h_uncharged(p2, 0).base == full_spectrum(p2).H_unch_base);
  CHECK(regime_of(p2, 0) == Regime::smooth);
  CHECK(regime_of(p2, 2) == Regime::terminal);
}

TEST_CASE("jacobian deformations") {
  CHECK(jacobian_cxdef(272, 10) == 262);
  CHECK(jacobian_cxdef(491, 0) == 491);
  CHECK_THROWS_AS(jacobian_cxdef(3, 5), InconsistencyError);
}

TEST_CASE("gravitational residual examples") {
  CHECK(gravitational_residual(spec(0, 0, 273)) == 0);
  CHECK(gravitational_residual(spec(248, 1, 492)) == 0);
  CHECK(gravitational_residual(spec(0, 0, 300)) == 27);
  auto s = spec(0, 0, 93);
  s.T_extra = 6;
  s.H_unch_extra = 3;
  CHECK(gravitational_residual(s) == -174);
  CHECK(gravitational_residual_alt(s) - gravitational_residual(s) == 3 * 1 + 29 * 6);
}

TEST_CASE("geometric residual examples") {
  CHECK(geometric_residual(fixture("p2_generic.json"), full_spectrum(fixture("p2_generic.json"))) == 0);
  CHECK(geometric_residual(fixture("enriques.json"), full_spectrum(fixture("enriques.json"))) == 0);
  CHECK(residual(Equation::geom, {{"K2", 8}, {"chi_top", -480}, {"sum_m", 1}, {"H_ch", 0}, {"dim_minus_rank", 0}}) ==
        Rational(-1, 2));
  auto doc = json::parse(R"({"base": {"kind": "hirzebruch", "n": 0}, "singularities": [{"id": "P", "milnor": 1}],
    "topology": {"h11_x": 3, "b3_x": 501, "chi_top": -480}})");
  const auto m = parse_model(doc);
  CHECK(geometric_residual(m, full_spectrum(m)) == Rational(-1, 2));
}

TEST_CASE("solve examples and errors") {
  CHECK(solve(Equation::grav, "H_unch", {{"V", 248}, {"T", 1}, {"H_ch", 0}}) == 492);
  CHECK(solve(Equation::geom, "chi_top", {{"K2", 9}, {"H_ch", 0}, {"dim_minus_rank", 0}, {"sum_m", 0}}) == -540);
  CHECK(solve(Equation::grav, "T", {{"V", 0}, {"H", 244}}) == 1);
  CHECK_THROWS_AS(solve(Equation::grav, "K2", {{"V", 0}, {"H", 302}, {"T", 0}}), SolveError);
  CHECK_THROWS_AS(solve(Equation::grav, "T", {{"V", 0}, {"H", 302}, {"T", 0}}), SolveError);
  CHECK_THROWS_AS(solve(Equation::grav, "T", {{"H", 302}}), SolveError);
  CHECK_THROWS_AS(solve(Equation::grav, "H_unch", {{"V", 0}, {"H", 302}, {"T", 0}}), SolveError);
  CHECK_THROWS_AS(solve(Equation::geom, "chi_top", {{"K2", 9}, {"V", 0}}), SolveError);
  CHECK_THROWS_AS(residual(Equation::geom, {{"K2", 9}}), SolveError);
}

TEST_CASE("bound examples") {
  const auto f12 = fixture("f12_e8.json");
  const auto s12 = full_spectrum(f12);
  auto v = check_rank_bound(f12);
  CHECK(v.status == BoundStatus::satisfied);
  CHECK(v.lhs == "8");
  CHECK(v.rhs == "11");

  auto doc = json::parse(R"({"base": {"kind": "hirzebruch", "n": 2}, "components": [{"id": "a", "genus": 0, "fiber": "I10"}],
    "topology": {"h11_x": 9, "b3_x": 100}})");
  CHECK(check_rank_bound(parse_model(doc)).status == BoundStatus::violated);
  CHECK(check_rank_bound(fixture("p2_generic.json")).status == BoundStatus::satisfied);

  v = check_cxdef(f12, s12);
  CHECK(v.status == BoundStatus::satisfied);
  CHECK(v.note == "boundary");
  CHECK(v.provenance == Provenance::theorem);
  auto hot = s12;
  hot.H_unch_base = 500;
  CHECK(check_cxdef(f12, hot).status == BoundStatus::violated);
  CHECK(check_cxdef(fixture("enriques.json"), full_spectrum(fixture("enriques.json"))).status == BoundStatus::not_applicable);
  auto no_section = f12;
  no_section.multisection_index = 3;
  CHECK(check_cxdef(no_section, hot).status == BoundStatus::warning);

  auto m = f12;
  m.topology.h11_x = 491;
  CHECK(check_mirror_bound(m, true).status == BoundStatus::satisfied);
  m.topology.h11_x = 492;
  CHECK(check_mirror_bound(m, true).status == BoundStatus::violated);
  CHECK(check_mirror_bound(m, false).status == BoundStatus::not_applicable);

  m = fixture("mw_rank10.json");
  CHECK(check_mw_rank(m).status == BoundStatus::satisfied);
  m = fixture("p2_generic.json");
  m.mordell_weil->rank = 25;
  CHECK(check_mw_rank(m).status == BoundStatus::violated);
  m.mordell_weil->rank = 21;
  CHECK(check_mw_rank(m).status == BoundStatus::satisfied);

  for (auto [a, b, ok] : std::vector<std::tuple<int, int, bool>>{
           {1, 6, true}, {6, 1, true}, {2, 4, true}, {4, 2, true}, {2, 2, true}, {3, 3, true}, {1, 1, true},
           {5, 5, false}, {1, 7, false}, {2, 6, false}, {4, 4, false}, {3, 6, false}}) {
    m.mordell_weil->torsion_n1 = a;
    m.mordell_weil->torsion_n2 = b;
    CHECK(check_mw_torsion(m).status == (ok ? BoundStatus::satisfied : BoundStatus::violated));
  }

  for (auto [n, st, note] : std::vector<std::tuple<int, BoundStatus, bool>>{
           {1, BoundStatus::satisfied, false}, {5, BoundStatus::satisfied, false},
           {6, BoundStatus::satisfied, true}, {7, BoundStatus::warning, false}}) {
    m.multisection_index = n;
    v = check_multisection_index(m);
    CHECK(v.status == st);
    CHECK(v.note.empty() == !note);
    CHECK(v.provenance == Provenance::conjecture);
  }
}

TEST_CASE("run_all order and provenance discipline") {
  const auto f12 = fixture("f12_e8.json");
  auto all = run_all(f12, full_spectrum(f12), false);
  std::vector<std::string> order;
  for (const auto& v : all) order.push_back(v.rule);
  CHECK(order == std::vector<std::string>{"rank_bound", "cxdef", "mirror_bound", "mw_rank", "mw_torsion", "multisection_index"});
  for (const auto& v : all) CHECK((v.status == BoundStatus::satisfied || v.status == BoundStatus::not_applicable));

  // Defaults-only optional data: not applicable instead of a silent pass.
  const auto bare = parse_model(p2_doc());
  all = run_all(bare, full_spectrum(bare), false);
  CHECK(verdict(all, "mw_rank").status == BoundStatus::not_applicable);
  CHECK(verdict(all, "mw_torsion").status == BoundStatus::not_applicable);
  CHECK(verdict(all, "multisection_index").status == BoundStatus::not_applicable);
  CHECK(verdict(all, "mirror_bound").status == BoundStatus::not_applicable);

  // Theorems never warn, conjectures never fail.
  auto m = f12;
  m.multisection_index = 9;
  m.mordell_weil = MordellWeil{30, 5, 5};
  m.topology.h11_x = 600;
  auto s = full_spectrum(m);
  s.H_unch_base = 900;
  for (const auto& v : run_all(m, s, true)) {
    if (v.provenance == Provenance::theorem) CHECK(v.status != BoundStatus::warning);
    else CHECK(v.status != BoundStatus::violated);
  }
}

TEST_CASE("reports are reproducible and carry the exit contract") {
  const RunOptions opts;
  const auto dir = std::filesystem::path(CYSPEC_FIXTURE_DIR);
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const auto a = to_json(run_file(e.path().string(), opts)).dump();
    const auto b = to_json(run_file(e.path().string(), opts)).dump();
    CHECK(a == b);
    CHECK(check_exit_code(run_file(e.path().string(), opts), opts) == exit_code::ok);
  }
  const auto data = std::filesystem::path(CYSPEC_TEST_DATA_DIR);
  CHECK(check_exit_code(run_file((data / "p2_tampered.json").string(), opts), opts) == exit_code::anomaly);
  CHECK(check_exit_code(run_file((data / "torsion_55.json").string(), opts), opts) == exit_code::bound);
  CHECK(check_exit_code(run_file((data / "malformed.json").string(), opts), opts) == exit_code::invalid);
  CHECK(check_exit_code(run_file((data / "missing.json").string(), opts), opts) == exit_code::invalid);
  const auto r = run_file((dir / "p2_generic.json").string(), opts);
  CHECK(r.input_digest.rfind("sha256:", 0) == 0);
  CHECK(r.input_digest.size() == 7 + 64);
  CHECK(content_digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  // Multiple-fiber regime reports both conventions.
  const auto q = run_file((data / "quotient_points.json").string(), opts);
  REQUIRE(q.anomaly.has_value());
  CHECK(q.anomaly->grav_residual == -174);
  REQUIRE(q.anomaly->grav_residual_alt.has_value());
  CHECK(*q.anomaly->grav_residual_alt == 3);
}
