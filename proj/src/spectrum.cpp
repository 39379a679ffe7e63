#include "cyspec/spectrum.hpp"

#include "json.hpp"

#include "cyspec/errors.hpp"

namespace cyspec {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::smooth: return "smooth";
    case Regime::terminal: return "terminal";
    case Regime::multiple_fibers: return "multiple_fibers";
  }
  return "?";
}

std::int64_t vector_multiplets(const FibrationModel& m) {
  const auto t = algebra_totals(gauge_algebra_of(m));
  return m.topology.h11_x - m.base.h11 - 1 + t.dim - t.rank;
}

TensorCount tensor_multiplets(const FibrationModel& m) {
  TensorCount t{m.base.h11 - 1, 0};
  for (const auto& q : m.base.quotient_points) t.extra += static_cast<std::int64_t>(q.count) * q.m;
  return t;
}

NeutralCount h_uncharged(const FibrationModel& m, std::int64_t sum_milnor) {
  NeutralCount n{Rational(m.topology.b3_x + sum_milnor, 2), 0};
  for (const auto& q : m.base.quotient_points) n.extra += q.count;
  return n;
}

NeutralCount h_uncharged(const FibrationModel& m, const MilnorOptions& opts) {
  return h_uncharged(m, total_milnor(m, opts));
}

ChargedCount h_charged(const FibrationModel& m) {
  ChargedCount out;
  const auto add = [&](const std::string& source, const char* term, const Rational& v) {
    out.breakdown.push_back({source, term, v});
    out.total += v;
  };
  for (const auto& c : m.components) {
    const auto rec = c.record();
    if (rec.algebra.family == Family::trivial) continue;
    add(c.id, "adjoint", Rational(c.genus) * charged_dim(rec.algebra, RepLabel{RepKind::adjoint}));
    const Rational rho0 = rec.rho0 ? charged_dim(rec.algebra, *rec.rho0) : Rational(0);
    add(c.id, "rho0", Rational(c.cover_genus - c.genus) * rho0);
  }
  for (const auto& p : m.matter) {
    if (!std::holds_alternative<std::monostate>(p.rep)) add(p.id, "rhoQ", Rational(p.count) * matter_charged_dim(m, p));
    if (p.c_q != 0) add(p.id, "c_Q", Rational(p.count * p.c_q));
  }
  return out;
}

Regime regime_of(const FibrationModel& m, std::int64_t sum_milnor) {
  if (!m.base.quotient_points.empty()) return Regime::multiple_fibers;
  if (!m.singularities.empty() || sum_milnor > 0) return Regime::terminal;
  return Regime::smooth;
}

SpectrumReport full_spectrum(const FibrationModel& m, const MilnorOptions& opts) {
  SpectrumReport s;
  s.sum_milnor = total_milnor(m, opts);
  s.regime = regime_of(m, s.sum_milnor);
  s.V = vector_multiplets(m);
  const auto t = tensor_multiplets(m);
  s.T_base = t.base;
  s.T_extra = t.extra;
  const auto h = h_uncharged(m, s.sum_milnor);
  s.H_unch_base = h.base;
  s.H_unch_extra = h.extra;
  auto ch = h_charged(m);
  s.H_ch = ch.total;
  s.breakdown = std::move(ch.breakdown);
  const auto tot = algebra_totals(gauge_algebra_of(m));
  s.dim_minus_rank = tot.dim - tot.rank;
  if (!is_integer(s.H_ch))
    s.warnings.push_back("H_ch = " + to_string(s.H_ch) + " is half-integral (odd count of half-hypermultiplets)");
  if (!is_integer(s.H_unch_base))
    s.warnings.push_back("H_unch = " + to_string(s.H_unch_base) + " is not an integer");
  return s;
}

std::int64_t jacobian_cxdef(std::int64_t cxdef_jacobian, std::int64_t conifold_count) {
  const auto r = cxdef_jacobian - conifold_count;
  if (conifold_count < 0 || r < 0)
    throw InconsistencyError("CxDef(Jac) = " + std::to_string(cxdef_jacobian) + " with " +
                             std::to_string(conifold_count) + " collision points gives a negative deformation count");
  return r;
}

nlohmann::json to_json(const SpectrumReport& s) {
  nlohmann::json j;
  j["V"] = s.V;
  j["T_base"] = s.T_base;
  j["T_extra"] = s.T_extra;
  j["H_unch_base"] = to_json_value(s.H_unch_base);
  j["H_unch_extra"] = s.H_unch_extra;
  j["H_ch"] = to_json_value(s.H_ch);
  j["regime"] = to_string(s.regime);
  j["sum_milnor"] = s.sum_milnor;
  j["dim_minus_rank"] = s.dim_minus_rank;
  j["breakdown"] = nlohmann::json::array();
  for (const auto& b : s.breakdown)
    j["breakdown"].push_back({{"source", b.source}, {"term", b.term}, {"value", to_json_value(b.value)}});
  j["warnings"] = s.warnings;
  return j;
}

}  // namespace cyspec
