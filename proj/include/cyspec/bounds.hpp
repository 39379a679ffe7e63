#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cyspec/model.hpp"
#include "cyspec/spectrum.hpp"

namespace cyspec {

enum class BoundStatus { satisfied, violated, warning, not_applicable };
/// theorem: may be violated. conditional: a theorem whose hypotheses the
/// input does not establish; reports warning instead. conjecture: warning only.
enum class Provenance { theorem, conditional, conjecture };

std::string to_string(BoundStatus s);
std::string to_string(Provenance p);

struct BoundVerdict {
  std::string rule;
  BoundStatus status = BoundStatus::not_applicable;
  std::string lhs;
  std::string relation;
  std::string rhs;
  Provenance provenance = Provenance::theorem;
  std::string note;
};

BoundVerdict check_rank_bound(const FibrationModel& m);
BoundVerdict check_cxdef(const FibrationModel& m, const SpectrumReport& s);
BoundVerdict check_mirror_bound(const FibrationModel& m, bool mirror_elliptic_with_section);
BoundVerdict check_mw_rank(const FibrationModel& m);
BoundVerdict check_mw_torsion(const FibrationModel& m);
BoundVerdict check_multisection_index(const FibrationModel& m);

/// Sorted pair with 1 for a trivial factor, e.g. (4,2) -> (2,4).
std::pair<int, int> normalize_torsion(int n1, int n2);
bool torsion_allowed(int n1, int n2);

std::vector<BoundVerdict> run_all(const FibrationModel& m, const SpectrumReport& s, bool mirror_elliptic_with_section);

nlohmann::json to_json(const BoundVerdict& v);

}  // namespace cyspec
