#include "cyspec/anomaly.hpp"

#include <algorithm>
#include "json.hpp"
#include <set>

#include "cyspec/errors.hpp"

namespace cyspec {

std::string to_string(Convention c) {
  switch (c) {
    case Convention::a: return "a";
    case Convention::b: return "b";
    case Convention::both: return "both";
  }
  return "?";
}

Convention parse_convention(const std::string& s) {
  if (s == "a") return Convention::a;
  if (s == "b") return Convention::b;
  if (s == "both") return Convention::both;
  throw ParseError("convention must be a, b or both", "");
}

std::string to_string(Equation e) { return e == Equation::grav ? "grav" : "geom"; }

Equation parse_equation(const std::string& s) {
  if (s == "grav") return Equation::grav;
  if (s == "geom") return Equation::geom;
  throw ParseError("equation must be grav or geom", "");
}

namespace {

struct Affine {
  std::map<std::string, Rational> coef;
  std::map<std::string, Rational> defaults;
  Rational constant;
};

const Affine& affine(Equation e) {
  static const Affine grav{
      {{"H_unch", 1}, {"H_ch", 1}, {"H", 1}, {"V", -1}, {"T", 29}, {"nm", 1}}, {{"nm", 0}}, Rational(-273)};
  static const Affine geom{{{"K2", 30},
                            {"chi_top", Rational(1, 2)},
                            {"sum_m", Rational(-1, 2)},
                            {"H_ch", -1},
                            {"dim_minus_rank", 1}},
                           {{"sum_m", 0}, {"H_ch", 0}, {"dim_minus_rank", 0}},
                           Rational(0)};
  return e == Equation::grav ? grav : geom;
}

// The terms actually present: for grav, H replaces the pair H_unch + H_ch.
std::vector<std::string> active_terms(Equation e, const Quantities& q, const std::string& unknown) {
  if (e == Equation::geom) return {"K2", "chi_top", "sum_m", "H_ch", "dim_minus_rank"};
  const bool total = q.count("H") || unknown == "H";
  if (total && (q.count("H_unch") || q.count("H_ch") || unknown == "H_unch" || unknown == "H_ch"))
    throw SolveError("H cannot be combined with H_unch or H_ch");
  if (total) return {"H", "V", "T", "nm"};
  return {"H_unch", "H_ch", "V", "T", "nm"};
}

Rational evaluate(Equation e, const Quantities& q, const std::string& unknown, Rational* unknown_coef) {
  const auto& a = affine(e);
  for (const auto& [k, v] : q)
    if (!a.coef.count(k)) throw SolveError("'" + k + "' does not enter the " + to_string(e) + " equation");
  const auto terms = active_terms(e, q, unknown);
  Rational r = a.constant;
  for (const auto& t : terms) {
    if (t == unknown) {
      if (q.count(t)) throw SolveError("'" + t + "' is both the unknown and supplied");
      if (unknown_coef) *unknown_coef = a.coef.at(t);
      continue;
    }
    if (auto it = q.find(t); it != q.end()) {
      r += a.coef.at(t) * it->second;
    } else if (auto d = a.defaults.find(t); d != a.defaults.end()) {
      r += a.coef.at(t) * d->second;
    } else {
      throw SolveError("under-determined: '" + t + "' is not supplied");
    }
  }
  if (!unknown.empty() && std::find(terms.begin(), terms.end(), unknown) == terms.end())
    throw SolveError("'" + unknown + "' does not enter the " + to_string(e) + " equation");
  return r;
}

}  // namespace

std::vector<std::string> equation_quantities(Equation e) {
  std::vector<std::string> out;
  for (const auto& [k, v] : affine(e).coef) out.push_back(k);
  return out;
}

Rational residual(Equation e, const Quantities& q) { return evaluate(e, q, "", nullptr); }

Rational solve(Equation e, const std::string& unknown, const Quantities& knowns) {
  if (unknown.empty()) throw SolveError("no unknown given");
  Rational c = 0;
  const Rational rest = evaluate(e, knowns, unknown, &c);
  return -rest / c;
}

Rational gravitational_residual(const SpectrumReport& s) {
  return residual(Equation::grav, {{"H_unch", s.H_unch_base},
                                   {"H_ch", s.H_ch},
                                   {"V", Rational(s.V)},
                                   {"T", Rational(s.T_base)},
                                   {"nm", Rational(s.T_extra)}});
}

Rational gravitational_residual_alt(const SpectrumReport& s) {
  return residual(Equation::grav, {{"H_unch", s.H_unch_base + s.H_unch_extra},
                                   {"H_ch", s.H_ch},
                                   {"V", Rational(s.V)},
                                   {"T", Rational(s.T_base + s.T_extra)},
                                   {"nm", Rational(s.T_extra)}});
}

Rational geometric_residual(const FibrationModel& m, const SpectrumReport& s) {
  if (!m.topology.chi_top) throw InvalidInputError("the geometric equation needs chi_top");
  return residual(Equation::geom, {{"K2", Rational(m.base.k2)},
                                   {"chi_top", Rational(*m.topology.chi_top)},
                                   {"sum_m", Rational(s.sum_milnor)},
                                   {"H_ch", s.H_ch},
                                   {"dim_minus_rank", Rational(s.dim_minus_rank)}});
}

AnomalyReport anomaly_report(const FibrationModel& m, const SpectrumReport& s) {
  AnomalyReport a;
  a.grav_residual = gravitational_residual(s);
  const bool multiple = s.regime == Regime::multiple_fibers;
  a.equations_used.push_back(multiple ? "gravitational-multiple-fibers-a" : "gravitational");
  if (multiple) {
    a.grav_residual_alt = gravitational_residual_alt(s);
    a.equations_used.push_back("gravitational-multiple-fibers-b");
  }
  a.inputs_echo = {{"H_unch_base", s.H_unch_base},
                   {"H_unch_extra", Rational(s.H_unch_extra)},
                   {"H_ch", s.H_ch},
                   {"V", Rational(s.V)},
                   {"T_base", Rational(s.T_base)},
                   {"T_extra", Rational(s.T_extra)},
                   {"K2", Rational(m.base.k2)},
                   {"sum_m", Rational(s.sum_milnor)},
                   {"dim_minus_rank", Rational(s.dim_minus_rank)}};
  if (m.topology.chi_top) {
    a.geom_residual = geometric_residual(m, s);
    a.equations_used.push_back("geometric");
    a.inputs_echo["chi_top"] = Rational(*m.topology.chi_top);
  }
  return a;
}

nlohmann::json to_json(const AnomalyReport& a) {
  nlohmann::json j;
  j["grav_residual"] = to_json_value(a.grav_residual);
  j["grav_residual_alt"] = a.grav_residual_alt ? to_json_value(*a.grav_residual_alt) : nlohmann::json(nullptr);
  j["geom_residual"] = a.geom_residual ? to_json_value(*a.geom_residual) : nlohmann::json(nullptr);
  j["equations_used"] = a.equations_used;
  j["inputs_echo"] = nlohmann::json::object();
  for (const auto& [k, v] : a.inputs_echo) j["inputs_echo"][k] = to_json_value(v);
  return j;
}

}  // namespace cyspec
