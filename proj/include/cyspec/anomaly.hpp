#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyspec/model.hpp"
#include "cyspec/spectrum.hpp"

namespace cyspec {

/// How the multiple-fiber spectrum enters the gravitational equation.
/// a: H, T without the extra neutral hypers and tensors, plus sum n_i m_i.
/// b: H, T including them, plus sum n_i m_i on top.
enum class Convention { a, b, both };
std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct AnomalyReport {
  Rational grav_residual;
  std::optional<Rational> grav_residual_alt;  // multiple-fiber regime only
  std::optional<Rational> geom_residual;      // needs chi_top
  std::vector<std::string> equations_used;
  std::map<std::string, Rational> inputs_echo;
};

/// Convention a. Outside the multiple-fiber regime both conventions agree.
Rational gravitational_residual(const SpectrumReport& s);
Rational gravitational_residual_alt(const SpectrumReport& s);
/// 30 K^2 + (chi - sum m)/2 - H_ch + (dim - rk). Throws InvalidInputError
/// without chi_top.
Rational geometric_residual(const FibrationModel& m, const SpectrumReport& s);

AnomalyReport anomaly_report(const FibrationModel& m, const SpectrumReport& s);

enum class Equation { grav, geom };
std::string to_string(Equation e);
Equation parse_equation(const std::string& s);

using Quantities = std::map<std::string, Rational>;

/// Quantity names: grav uses H_unch, H_ch (or their sum H), V, T and nm
/// (sum n_i m_i, default 0); geom uses K2, chi_top, sum_m, H_ch and
/// dim_minus_rank (the last two default to 0, as does sum_m).
std::vector<std::string> equation_quantities(Equation e);

/// Residual of the equation at fully specified quantities. Throws SolveError.
Rational residual(Equation e, const Quantities& q);

/// The value of `unknown` making the residual zero. Throws SolveError when the
/// unknown is not in the equation, is also supplied, or anything else is missing.
Rational solve(Equation e, const std::string& unknown, const Quantities& knowns);

nlohmann::json to_json(const AnomalyReport& a);

}  // namespace cyspec
