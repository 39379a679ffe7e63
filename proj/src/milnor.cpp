#include "cyspec/milnor.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cyspec/errors.hpp"

namespace cyspec {

namespace {

using Row = std::vector<std::pair<int, mpq_class>>;

mpq_class to_mpq(const Rational& q) {
  mpq_class r(to_string(q), 10);
  r.canonicalize();
  return r;
}

std::size_t binom(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::size_t>(r + 0.5L);
}

// Monomials of degree <= D in n variables, listed by ascending degree.
class MonomialIndex {
 public:
  MonomialIndex(int n, int D) : n_(n), base_(static_cast<std::uint64_t>(D) + 1) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int d = 0; d <= D; ++d) {
      first_of_degree_.push_back(static_cast<int>(mons_.size()));
      fill(e, 0, d);
    }
    first_of_degree_.push_back(static_cast<int>(mons_.size()));
  }

  int size() const { return static_cast<int>(mons_.size()); }
  const Exponent& at(int i) const { return mons_[static_cast<std::size_t>(i)]; }
  int index(const Exponent& e) const { return lookup_.at(key(e)); }
  int first_of_degree(int d) const { return first_of_degree_[static_cast<std::size_t>(d)]; }
  int degree_of(int i) const {
    return static_cast<int>(std::upper_bound(first_of_degree_.begin(), first_of_degree_.end(), i) -
                            first_of_degree_.begin()) - 1;
  }

 private:
  int n_;
  std::uint64_t base_;
  std::vector<Exponent> mons_;
  std::vector<int> first_of_degree_;
  std::unordered_map<std::uint64_t, int> lookup_;

  std::uint64_t key(const Exponent& e) const {
    std::uint64_t k = 0;
    for (int x : e) k = k * base_ + static_cast<std::uint64_t>(x);
    return k;
  }

  void fill(Exponent& e, int var, int remaining) {
    if (var == n_ - 1) {
      e[static_cast<std::size_t>(var)] = remaining;
      lookup_.emplace(key(e), static_cast<int>(mons_.size()));
      mons_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      fill(e, var + 1, remaining - k);
    }
  }
};

// row -= c * pivot, both sorted by column.
Row axpy(const Row& row, const mpq_class& c, const Row& pivot) {
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -c * pivot[j].second);
      ++j;
    } else {
      mpq_class v = row[i].second - c * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Truncated {
  int quotient_dim = 0;  // dim C[x]/(I + m^D)
  bool certified = false;
};

// Elimination in C[x]/m^(D+1) with pivots on the lowest-degree monomial. Rows
// whose leading monomial has degree < D span (I + m^D)/m^D, so one pass gives
// both the quotient dimension at D and whether all of degree D is reducible.
Truncated truncated_quotient(const std::vector<Polynomial>& gens, int n, int D) {
  const MonomialIndex mons(n, D);
  std::vector<Row> pivots(static_cast<std::size_t>(mons.size()));
  std::vector<bool> has_pivot(static_cast<std::size_t>(mons.size()), false);
  int pivot_count = 0;

  std::vector<std::pair<int, std::pair<int, std::size_t>>> jobs;  // (degree, (monomial, generator))
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int o = gens[g].order();
    if (o > D) continue;
    for (int m = 0; m < mons.first_of_degree(D - o + 1); ++m)
      jobs.push_back({mons.degree_of(m) + o, {m, g}});
  }
  std::stable_sort(jobs.begin(), jobs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& job : jobs) {
    if (pivot_count == mons.size()) break;
    const Exponent& a = mons.at(job.second.first);
    const Polynomial& g = gens[job.second.second];
    Row row;
    for (const auto& [e, c] : g.terms) {
      Exponent p = e;
      int deg = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] += a[i];
        deg += p[i];
      }
      if (deg > D) continue;
      row.emplace_back(mons.index(p), to_mpq(c));
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty() && has_pivot[static_cast<std::size_t>(row.front().first)]) {
      const mpq_class c = row.front().second;
      row = axpy(row, c, pivots[static_cast<std::size_t>(row.front().first)]);
    }
    if (row.empty()) continue;
    const mpq_class lead = row.front().second;
    for (auto& t : row) t.second /= lead;
    const auto col = static_cast<std::size_t>(row.front().first);
    pivots[col] = std::move(row);
    has_pivot[col] = true;
    ++pivot_count;
  }

  const int below = mons.first_of_degree(D);
  int pivots_below = 0;
  for (int i = 0; i < below; ++i) pivots_below += has_pivot[static_cast<std::size_t>(i)];
  return {below - pivots_below, pivot_count - pivots_below == mons.size() - below};
}

}  // namespace

MilnorResult milnor_compute(const Polynomial& f, const MilnorOptions& opts) {
  if (f.is_zero()) throw InvalidInputError("the zero polynomial has no isolated singularity");
  if (f.order() < 2) throw NotASingularityError("the origin is not a singular point");
  const int n = f.nvars;
  std::vector<Polynomial> gens;
  if (opts.ideal == MilnorIdeal::with_function) gens.push_back(f);
  for (int i = 0; i < n; ++i) {
    auto d = derivative(f, i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  const int cap = std::max(opts.degree_cap, 1);
  int D = std::min(std::max(2 * f.degree(), 1), cap);
  while (true) {
    if (binom(D + n, n) > opts.monomial_budget) {
      throw MilnorInconclusiveError("local algebra not certified: truncation degree " + std::to_string(D) +
                                        " exceeds the monomial budget (degree cap " + std::to_string(cap) +
                                        "); the singularity is probably not isolated",
                                    cap);
    }
    const auto t = truncated_quotient(gens, n, D);
    if (t.certified) return {t.quotient_dim, D};
    if (D >= cap) break;
    D = std::min(2 * D, cap);
  }
  throw MilnorInconclusiveError("local algebra not certified up to degree cap " + std::to_string(cap) +
                                    "; the singularity is not isolated or needs a larger cap",
                                cap);
}

int milnor_number(const PolyGerm& f, const MilnorOptions& opts) { return milnor_compute(f.poly, opts).value; }

MilnorPair milnor_both(const PolyGerm& f, const MilnorOptions& opts) {
  auto o = opts;
  o.ideal = MilnorIdeal::with_function;
  const int a = milnor_number(f, o);
  o.ideal = MilnorIdeal::jacobian_only;
  return {a, milnor_number(f, o)};
}

int milnor_quasihomogeneous(const PolyGerm& f, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != f.num_vars())
    throw OracleInapplicableError("weight vector has " + std::to_string(w.size()) + " entries, germ has " +
                                  std::to_string(f.num_vars()) + " variables");
  for (const auto& wi : w)
    if (wi <= 0) throw OracleInapplicableError("weights must be positive");
  for (const auto& [e, c] : f.poly.terms) {
    Rational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    if (d != 1) throw OracleInapplicableError("germ is not quasi-homogeneous of degree 1 for these weights");
  }
  Rational prod = 1;
  for (const auto& wi : w) prod *= 1 / wi - 1;
  if (!is_integer(prod) || prod < 0)
    throw OracleInapplicableError("product formula gives " + to_string(prod) + ", not a non-negative integer");
  return static_cast<int>(to_int64(prod));
}

std::optional<std::vector<Rational>> quasihomogeneous_weights(const PolyGerm& f) {
  const auto n = static_cast<std::size_t>(f.num_vars());
  std::vector<std::vector<Rational>> m;
  for (const auto& [e, c] : f.poly.terms) {
    std::vector<Rational> row(e.begin(), e.end());
    row.emplace_back(1);
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const Rational lead = m[rank][col];
    for (auto& x : m[rank]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational c = m[r][col];
      for (std::size_t k = 0; k <= n; ++k) m[r][k] -= c * m[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r)
    if (m[r][n] != 0) return std::nullopt;
  if (rank < n) return std::nullopt;
  std::vector<Rational> w(n);
  for (std::size_t r = 0; r < rank; ++r) w[pivot_col[r]] = m[r][n];
  for (const auto& x : w)
    if (x <= 0) return std::nullopt;
  return w;
}

}  // namespace cyspec
