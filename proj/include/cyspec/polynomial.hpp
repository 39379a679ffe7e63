#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyspec/rational.hpp"

namespace cyspec {

using Exponent = std::vector<int>;

/// Sparse polynomial with exact rational coefficients in `nvars` variables.
/// Zero coefficients are never stored.
struct Polynomial {
  int nvars = 0;
  std::map<Exponent, Rational> terms;

  explicit Polynomial(int n = 0) : nvars(n) {}

  bool is_zero() const { return terms.empty(); }
  /// Largest total degree of a term (0 for the zero polynomial).
  int degree() const;
  /// Smallest total degree of a term (0 for the zero polynomial).
  int order() const;

  void add_term(const Exponent& e, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial constant(int nvars, const Rational& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);
Polynomial pow(const Polynomial& a, int e);
Polynomial derivative(const Polynomial& a, int var);

/// x, y, z, w, v, u   or   x1 .. x6.
enum class VarStyle { letters, indexed };

/// A polynomial germ at the origin together with the names of its variables.
/// `vars[i]` is the 0-based name index of polynomial variable i (x=0, y=1, ...
/// for letters; x1=0, x2=1, ... for indexed). Only variables that occur in the
/// text are kept.
struct PolyGerm {
  Polynomial poly;
  VarStyle style = VarStyle::letters;
  std::vector<int> vars;

  int num_vars() const { return poly.nvars; }
  friend bool operator==(const PolyGerm&, const PolyGerm&) = default;
};

/// Grammar: terms joined by + or -, term = [coeff "*"] factor {"*" factor},
/// factor = var ["^" n], coeff = integer or integer/integer. Whitespace is
/// ignored and U+2212 is read as minus. Throws ParseError (location is the
/// 1-based column), NotASingularityError for constant or linear terms and
/// InvalidInputError for the zero polynomial.
PolyGerm parse_poly(const std::string& text);

/// Canonical text: terms by ascending degree, then by descending exponent
/// vector. parse_poly(to_string(g)) == g.
std::string to_string(const PolyGerm& g);

/// Germ with variables renamed to the first `nvars` names of `style`.
PolyGerm make_germ(const Polynomial& p, VarStyle style = VarStyle::letters);

/// f(x) with x_i replaced by sum_j m[i][j] x_j.
Polynomial linear_substitution(const Polynomial& f, const std::vector<std::vector<Rational>>& m);

/// f(x_1..x_n) + g(x_{n+1}..x_{n+m}).
Polynomial disjoint_sum(const Polynomial& f, const Polynomial& g);

}  // namespace cyspec
