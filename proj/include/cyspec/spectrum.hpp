#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyspec/model.hpp"

namespace cyspec {

enum class Regime { smooth, terminal, multiple_fibers };
std::string to_string(Regime r);

struct BreakdownEntry {
  std::string source;  // component or matter id
  std::string term;    // adjoint, rho0, rhoQ, c_Q
  Rational value;
  friend bool operator==(const BreakdownEntry&, const BreakdownEntry&) = default;
};

struct SpectrumReport {
  std::int64_t V = 0;
  std::int64_t T_base = 0;
  std::int64_t T_extra = 0;
  Rational H_unch_base;
  std::int64_t H_unch_extra = 0;
  Rational H_ch;
  std::vector<BreakdownEntry> breakdown;
  Regime regime = Regime::smooth;

  // Echo of the inputs the anomaly equations need.
  std::int64_t sum_milnor = 0;
  std::int64_t dim_minus_rank = 0;
  std::vector<std::string> warnings;
};

std::int64_t vector_multiplets(const FibrationModel& m);

struct TensorCount {
  std::int64_t base = 0;
  std::int64_t extra = 0;
};
TensorCount tensor_multiplets(const FibrationModel& m);

struct NeutralCount {
  Rational base;
  std::int64_t extra = 0;
};
NeutralCount h_uncharged(const FibrationModel& m, std::int64_t sum_milnor);
NeutralCount h_uncharged(const FibrationModel& m, const MilnorOptions& opts = {});

struct ChargedCount {
  Rational total;
  std::vector<BreakdownEntry> breakdown;
};
ChargedCount h_charged(const FibrationModel& m);

Regime regime_of(const FibrationModel& m, std::int64_t sum_milnor);

/// Expects a model without validation errors.
SpectrumReport full_spectrum(const FibrationModel& m, const MilnorOptions& opts = {});

/// Deformations of a genus-one fibration from its Jacobian's, less one per
/// I2 -> I1 collision point. Throws InconsistencyError if negative.
std::int64_t jacobian_cxdef(std::int64_t cxdef_jacobian, std::int64_t conifold_count);

nlohmann::json to_json(const SpectrumReport& s);

}  // namespace cyspec
