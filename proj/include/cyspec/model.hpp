#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cyspec/kodaira.hpp"
#include "cyspec/liealg.hpp"
#include "cyspec/milnor.hpp"

namespace cyspec {

enum class BaseKind { p2, hirzebruch, generic_rational, enriques, rational_with_quotient_points };

std::string to_string(BaseKind k);

/// `count` points of type A_m on the base.
struct QuotientPoint {
  int m = 1;
  int count = 1;
  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

struct BaseSurface {
  BaseKind kind = BaseKind::p2;
  int n = 0;  // Hirzebruch index
  int h11 = 1;
  std::int64_t k2 = 9;
  std::vector<QuotientPoint> quotient_points;

  bool rational() const { return kind != BaseKind::enriques; }
  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct DiscriminantComponent {
  std::string id;
  int genus = 0;
  /// Genus of the monodromy cover. Equal to `genus` for simply-laced algebras.
  int cover_genus = 0;
  FiberType fiber;
  Monodromy monodromy = Monodromy::split;

  FiberRecord record() const { return fiber_record(fiber, monodromy); }
  friend bool operator==(const DiscriminantComponent&, const DiscriminantComponent&) = default;
};

enum class Slot { Q1, Q2 };

/// One factor of an explicitly given (multi-)representation.
struct ExplicitRep {
  std::string component;
  RepLabel label;
  friend bool operator==(const ExplicitRep&, const ExplicitRep&) = default;
};

/// No representation (c_Q only), a table slot of the first component in `on`,
/// or a tensor product of representations of distinct components.
using RepAssignment = std::variant<std::monostate, Slot, std::vector<ExplicitRep>>;

struct MatterPoint {
  std::string id;
  std::vector<std::string> on;
  RepAssignment rep;
  std::int64_t count = 1;
  std::int64_t c_q = 0;
  friend bool operator==(const MatterPoint&, const MatterPoint&) = default;
};

struct TerminalSingularity {
  std::string id;
  std::optional<std::string> poly;  // canonical text
  std::optional<int> milnor;
  friend bool operator==(const TerminalSingularity&, const TerminalSingularity&) = default;
};

struct Topology {
  int h11_x = 0;
  std::int64_t b3_x = 0;
  std::optional<std::int64_t> chi_top;
  friend bool operator==(const Topology&, const Topology&) = default;
};

struct MordellWeil {
  int rank = 0;
  int torsion_n1 = 1;
  int torsion_n2 = 1;
  friend bool operator==(const MordellWeil&, const MordellWeil&) = default;
};

struct FibrationModel {
  BaseSurface base;
  std::vector<DiscriminantComponent> components;
  std::vector<MatterPoint> matter;
  std::vector<TerminalSingularity> singularities;
  Topology topology;
  /// Absent blocks keep their defaults but are reported as not supplied.
  std::optional<MordellWeil> mordell_weil;
  std::optional<int> multisection_index;
  bool multiple_fibers_disjoint = true;
  /// Add the fiber table m-values of Q1/Q2 slot matter to the Milnor total.
  bool table_milnor = false;

  MordellWeil mw() const { return mordell_weil.value_or(MordellWeil{}); }
  int index() const { return multisection_index.value_or(1); }
  bool has_section() const { return index() == 1; }
  const DiscriminantComponent* component(const std::string& id) const;

  friend bool operator==(const FibrationModel&, const FibrationModel&) = default;
};

/// Throws ParseError whose location is a JSON pointer; propagates
/// UnknownFiberError and polynomial errors re-wrapped as ParseError.
FibrationModel parse_model(const std::string& text);
FibrationModel parse_model(const nlohmann::json& doc);

/// Canonical document: every field written, defaults made explicit except the
/// optional mordell_weil / multisection_index blocks.
nlohmann::json serialize_model(const FibrationModel& m);

enum class Severity { error, warning };

struct Violation {
  std::string rule;
  Severity severity = Severity::error;
  std::string location;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Severity s);

std::vector<Violation> validate(const FibrationModel& m, const MilnorOptions& opts = {});
bool has_errors(const std::vector<Violation>& v);

GaugeAlgebra gauge_algebra_of(const FibrationModel& m);

/// Milnor number of each singularity in order (computed or given).
std::vector<int> singularity_milnor(const FibrationModel& m, const MilnorOptions& opts = {});
/// Table m-values of slot matter, when the model opts in.
std::int64_t table_milnor_total(const FibrationModel& m);
std::int64_t total_milnor(const FibrationModel& m, const MilnorOptions& opts = {});

/// Charged dimension of one matter point's representation, times nothing
/// (count is applied by the caller).
Rational matter_charged_dim(const FibrationModel& m, const MatterPoint& p);

}  // namespace cyspec
