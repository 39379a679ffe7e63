#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyspec/polynomial.hpp"
#include "cyspec/rational.hpp"

namespace cyspec {

/// with_function: <f, df/dx_1, ..., df/dx_n> (the default).
/// jacobian_only: <df/dx_1, ..., df/dx_n>, the classical Milnor number.
enum class MilnorIdeal { with_function, jacobian_only };

struct MilnorOptions {
  MilnorIdeal ideal = MilnorIdeal::with_function;
  int degree_cap = 64;
  /// Largest number of monomials (all degrees up to the truncation) the
  /// linear algebra may touch before giving up as inconclusive.
  std::size_t monomial_budget = 60000;
};

struct MilnorResult {
  int value = 0;
  /// Truncation degree D at which every degree-D monomial reduced into the ideal.
  int certified_degree = 0;
};

/// dim of C{x}/I at the origin by exact elimination in C[x]/m^(D+1).
/// Throws InvalidInputError for the zero polynomial and
/// MilnorInconclusiveError when no D up to the cap certifies.
MilnorResult milnor_compute(const Polynomial& f, const MilnorOptions& opts = {});
int milnor_number(const PolyGerm& f, const MilnorOptions& opts = {});

/// Both ideals, for reporting when they differ.
struct MilnorPair {
  int with_function = 0;
  int jacobian_only = 0;
};
MilnorPair milnor_both(const PolyGerm& f, const MilnorOptions& opts = {});

/// Product formula prod(1/w_i - 1). Throws OracleInapplicableError when f is
/// not quasi-homogeneous of weighted degree 1 for w or the product is not a
/// non-negative integer.
int milnor_quasihomogeneous(const PolyGerm& f, const std::vector<Rational>& w);

/// The unique positive weight vector making f quasi-homogeneous of degree 1,
/// if the term exponents determine one.
std::optional<std::vector<Rational>> quasihomogeneous_weights(const PolyGerm& f);

}  // namespace cyspec
