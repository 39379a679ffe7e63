#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyspec/rational.hpp"

namespace cyspec {

enum class Family { su, sp, so, g2, f4, e6, e7, e8, u1, trivial };

/// A simple Lie algebra (or u(1), or the trivial algebra {e}).
/// `param` is n for su(n), k for sp(k), m for so(m) and 0 otherwise.
struct LieAlgebraId {
  Family family = Family::trivial;
  int param = 0;

  static LieAlgebraId su(int n) { return {Family::su, n}; }
  static LieAlgebraId sp(int k) { return {Family::sp, k}; }
  static LieAlgebraId so(int m) { return {Family::so, m}; }
  static LieAlgebraId g2() { return {Family::g2, 0}; }
  static LieAlgebraId f4() { return {Family::f4, 0}; }
  static LieAlgebraId e6() { return {Family::e6, 0}; }
  static LieAlgebraId e7() { return {Family::e7, 0}; }
  static LieAlgebraId e8() { return {Family::e8, 0}; }
  static LieAlgebraId u1() { return {Family::u1, 0}; }
  static LieAlgebraId trivial() { return {Family::trivial, 0}; }

  friend bool operator==(const LieAlgebraId&, const LieAlgebraId&) = default;
};

/// Throws InvalidAlgebraError for out-of-range parameters.
void check_algebra(const LieAlgebraId& a);
bool simply_laced(const LieAlgebraId& a);

/// "su(5)", "sp(2)", "so(10)", "g2", "u1", "trivial".
std::string to_string(const LieAlgebraId& a);
/// Inverse of to_string; throws ParseError / InvalidAlgebraError.
LieAlgebraId parse_algebra(const std::string& text);

enum class RepKind {
  adjoint,
  fund,
  lambda2,
  lambda2_traceless,
  vect,
  spin,
  spin_plus_minus,
  dim7_g2,
  dim26_f4,
  dim27_e6,
  dim56_e7,
};

std::string to_string(RepKind k);
RepKind parse_rep_kind(const std::string& text);

/// One representation with its hypermultiplet multiplicity, e.g. "2*fund" or
/// the half-hypermultiplet "half:fund".
struct RepLabel {
  RepKind kind = RepKind::fund;
  bool half_hyper = false;
  Rational multiplicity{1};

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Direct sum of labels, e.g. Lambda^2 + 2 x fund.
using RepSum = std::vector<RepLabel>;

/// "lambda2+2*fund", "half:dim56_e7". Multiplicity 1 is omitted.
std::string to_string(const RepLabel& r);
std::string to_string(const RepSum& r);
/// Inverse of to_string(RepSum). Throws ParseError.
RepSum parse_rep_sum(const std::string& text);

/// Whether (a, kind) may be taken as a half-hypermultiplet.
bool half_hyper_allowed(const LieAlgebraId& a, RepKind kind);

using Weight = std::vector<std::int64_t>;

/// Weights of a representation as integer vectors in a fixed (possibly
/// rescaled) orthogonal coordinate system of dimension `ambient_rank`.
struct WeightSystem {
  int ambient_rank = 0;
  std::vector<Weight> weights;

  std::size_t dimension() const { return weights.size(); }
  std::size_t zero_weight_multiplicity() const;
};

int dim_algebra(const LieAlgebraId& a);
int rank_algebra(const LieAlgebraId& a);

/// Weight multiset of the irreducible representation `kind` (multiplicity and
/// half-hyper flags are not applied here). Throws UnsupportedRepresentationError.
WeightSystem weight_system(const LieAlgebraId& a, RepKind kind);
WeightSystem weight_system(const LieAlgebraId& a, const RepLabel& r);

/// dim(rho) * multiplicity * (1/2 if half-hyper).
Rational dim_rep(const LieAlgebraId& a, const RepLabel& r);
Rational dim_rep(const LieAlgebraId& a, const RepSum& r);

/// (dim rho - zero-weight multiplicity) * multiplicity * (1/2 if half-hyper).
Rational charged_dim(const LieAlgebraId& a, const RepLabel& r);
Rational charged_dim(const LieAlgebraId& a, const RepSum& r);

struct GaugeAlgebra {
  std::vector<LieAlgebraId> nonabelian_factors;
  int abelian_rank = 0;

  friend bool operator==(const GaugeAlgebra&, const GaugeAlgebra&) = default;
};

struct AlgebraTotals {
  int dim = 0;
  int rank = 0;
  friend bool operator==(const AlgebraTotals&, const AlgebraTotals&) = default;
};

AlgebraTotals algebra_totals(const GaugeAlgebra& g);

// Root-system machinery. Exposed so tests can check the closed-form classical
// weight systems against highest-weight generation.

/// Simple roots of `a` as integer vectors (coordinates rescaled where the
/// conventional realisation uses half-integers).
std::vector<Weight> simple_roots(const LieAlgebraId& a);

/// Full root system generated from the simple roots by Weyl reflections.
std::vector<Weight> root_system(const std::vector<Weight>& simple);

/// Weights of the irreducible representation with the given Dynkin labels,
/// with multiplicities from Freudenthal's formula. The result may be expressed
/// in a finer rescaling than the simple roots; the scale is reported.
struct HighestWeightModule {
  WeightSystem weights;
  std::int64_t scale = 1;
};
HighestWeightModule weights_from_highest(const std::vector<Weight>& simple,
                                         const std::vector<int>& dynkin_labels);

}  // namespace cyspec
