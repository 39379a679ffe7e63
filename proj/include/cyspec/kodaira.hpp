#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyspec/liealg.hpp"
#include "cyspec/rational.hpp"

namespace cyspec {

enum class FiberSymbol { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

/// Kodaira fiber type. `n` is the subscript of I_n (n >= 1) and I*_n (n >= 0).
struct FiberType {
  FiberSymbol symbol = FiberSymbol::I;
  int n = 1;

  friend bool operator==(const FiberType&, const FiberType&) = default;
};

/// "I5", "I0*", "IV*", "II".
std::string to_string(const FiberType& f);
FiberType parse_fiber(const std::string& text);

/// Selects among the algebra rows sharing one fiber symbol. For fibers with a
/// single row only `split` is accepted.
enum class Monodromy { split, semi_split, non_split };

std::string to_string(Monodromy m);
Monodromy parse_monodromy(const std::string& text);

/// The four published charged-dimension columns of one row. Absent entries are
/// blank or "--" cells.
struct ChargedColumns {
  std::optional<Rational> adjoint;
  std::optional<Rational> rho0;
  std::optional<Rational> rhoQ1;
  std::optional<Rational> rhoQ2;

  friend bool operator==(const ChargedColumns&, const ChargedColumns&) = default;
};

/// One instantiated row of the fiber table.
struct FiberRecord {
  FiberType fiber;
  Monodromy monodromy = Monodromy::split;
  LieAlgebraId algebra;
  std::optional<RepSum> rho0;
  std::optional<RepSum> rhoQ1;
  std::optional<RepSum> rhoQ2;
  int mP1 = 0;
  int mP2 = 0;
  ChargedColumns table_charged;

  friend bool operator==(const FiberRecord&, const FiberRecord&) = default;
};

/// Throws UnknownFiberError for combinations absent from the table.
FiberRecord fiber_record(const FiberType& f, Monodromy m);

struct MilnorContributions {
  int mP1 = 0;
  int mP2 = 0;
  friend bool operator==(const MilnorContributions&, const MilnorContributions&) = default;
};

MilnorContributions milnor_contributions(const FiberType& f, Monodromy m);

/// Every mismatch between the recorded charged-dimension columns and the
/// weight-system engine. Empty means the record agrees.
std::vector<std::string> validate_record_against_engine(const FiberRecord& rec);

/// All records with fiber parameters up to `max_param` (n for I_n and I*_n).
std::vector<FiberRecord> enumerate_records(int max_param);

}  // namespace cyspec
