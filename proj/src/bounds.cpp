#include "cyspec/bounds.hpp"

#include <algorithm>
#include "json.hpp"

namespace cyspec {

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::violated: return "violated";
    case BoundStatus::warning: return "warning";
    case BoundStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::theorem: return "theorem";
    case Provenance::conditional: return "conditional";
    case Provenance::conjecture: return "conjecture";
  }
  return "?";
}

namespace {

constexpr std::int64_t kCxDefMax = 491;
constexpr std::int64_t kH11Max = 491;
constexpr int kHighestKnownIndex = 5;
constexpr int kConjecturedIndex = 6;

// A failed comparison is a violation for theorems and a warning otherwise.
BoundStatus failed(Provenance p) { return p == Provenance::theorem ? BoundStatus::violated : BoundStatus::warning; }

BoundVerdict compare(std::string rule, Provenance p, std::int64_t lhs, const char* rel, std::int64_t rhs) {
  const bool ok = std::string(rel) == "<" ? lhs < rhs : lhs <= rhs;
  BoundVerdict v{std::move(rule), ok ? BoundStatus::satisfied : failed(p), std::to_string(lhs), rel,
                 std::to_string(rhs), p, ""};
  if (ok && std::string(rel) == "<=" && lhs == rhs) v.note = "boundary";
  return v;
}

BoundVerdict not_applicable(std::string rule, Provenance p, std::string note) {
  return {std::move(rule), BoundStatus::not_applicable, "", "", "", p, std::move(note)};
}

}  // namespace

BoundVerdict check_rank_bound(const FibrationModel& m) {
  int rank = 0;
  for (const auto& a : gauge_algebra_of(m).nonabelian_factors) rank += rank_algebra(a);
  auto v = compare("rank_bound", Provenance::theorem, rank, "<", m.topology.h11_x);
  v.note = "rk Pic(X) taken as h11(X)";
  return v;
}

BoundVerdict check_cxdef(const FibrationModel& m, const SpectrumReport& s) {
  if (!m.base.rational()) return not_applicable("cxdef", Provenance::theorem, "base is not rational");
  const Rational cx = s.H_unch_base - 1;
  if (!is_integer(cx)) return not_applicable("cxdef", Provenance::theorem, "H_unch is not an integer");
  const auto p = m.has_section() ? Provenance::theorem : Provenance::conditional;
  auto v = compare("cxdef", p, to_int64(cx), "<=", kCxDefMax);
  if (p == Provenance::conditional) {
    std::string n = "no section: bound carried over from the Jacobian fibration";
    v.note = v.note.empty() ? n : v.note + "; " + n;
  }
  return v;
}

BoundVerdict check_mirror_bound(const FibrationModel& m, bool mirror_elliptic_with_section) {
  if (!mirror_elliptic_with_section)
    return not_applicable("mirror_bound", Provenance::theorem, "mirror elliptic-with-section hypothesis not asserted");
  auto v = compare("mirror_bound", Provenance::theorem, m.topology.h11_x, "<=", kH11Max);
  v.note = v.note.empty() ? "hypothesis asserted by the user" : v.note + "; hypothesis asserted by the user";
  return v;
}

BoundVerdict check_mw_rank(const FibrationModel& m) {
  if (!m.mordell_weil) return not_applicable("mw_rank", Provenance::theorem, "Mordell-Weil data not supplied");
  const int bound = m.base.kind == BaseKind::p2 ? 24 : 20;
  auto v = compare("mw_rank", Provenance::theorem, m.mordell_weil->rank, "<=", bound);
  if (v.note == "boundary") v.note.clear();
  return v;
}

std::pair<int, int> normalize_torsion(int n1, int n2) { return {std::min(n1, n2), std::max(n1, n2)}; }

bool torsion_allowed(int n1, int n2) {
  const auto [a, b] = normalize_torsion(n1, n2);
  if (a == 1) return b >= 1 && b <= 6;
  return (a == 2 && b == 2) || (a == 3 && b == 3) || (a == 2 && b == 4);
}

BoundVerdict check_mw_torsion(const FibrationModel& m) {
  if (!m.mordell_weil) return not_applicable("mw_torsion", Provenance::theorem, "Mordell-Weil data not supplied");
  const auto [a, b] = normalize_torsion(m.mordell_weil->torsion_n1, m.mordell_weil->torsion_n2);
  const bool ok = torsion_allowed(a, b);
  return {"mw_torsion",
          ok ? BoundStatus::satisfied : BoundStatus::violated,
          "(" + std::to_string(a) + "," + std::to_string(b) + ")",
          "in",
          "{(1,n): n<=6} u {(2,2),(3,3),(2,4)}",
          Provenance::theorem,
          ""};
}

BoundVerdict check_multisection_index(const FibrationModel& m) {
  if (!m.multisection_index)
    return not_applicable("multisection_index", Provenance::conjecture, "multisection index not supplied");
  auto v = compare("multisection_index", Provenance::conjecture, *m.multisection_index, "<=", kConjecturedIndex);
  v.note.clear();
  if (*m.multisection_index > kHighestKnownIndex && *m.multisection_index <= kConjecturedIndex)
    v.note = "exceeds highest known index " + std::to_string(kHighestKnownIndex);
  return v;
}

std::vector<BoundVerdict> run_all(const FibrationModel& m, const SpectrumReport& s, bool mirror) {
  return {check_rank_bound(m),      check_cxdef(m, s),        check_mirror_bound(m, mirror),
          check_mw_rank(m),         check_mw_torsion(m),      check_multisection_index(m)};
}

nlohmann::json to_json(const BoundVerdict& v) {
  return {{"rule", v.rule},         {"status", to_string(v.status)},         {"lhs", v.lhs}, {"relation", v.relation},
          {"rhs", v.rhs},           {"provenance", to_string(v.provenance)}, {"note", v.note}};
}

}  // namespace cyspec
