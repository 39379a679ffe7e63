#include "cyspec/liealg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "cyspec/errors.hpp"

namespace cyspec {

namespace {

using Q = Rational;

std::int64_t dot(const Weight& a, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight axpy(const Weight& x, std::int64_t c, const Weight& y) {
  Weight out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * y[i];
  return out;
}

Weight scaled(const Weight& x, std::int64_t c) {
  Weight out = x;
  for (auto& v : out) v *= c;
  return out;
}

// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha); integral for weights.
std::int64_t coroot_pairing(const Weight& v, const Weight& alpha) {
  const auto num = 2 * dot(v, alpha);
  const auto den = dot(alpha, alpha);
  if (num % den != 0) throw Error("non-integral coroot pairing in weight lattice");
  return num / den;
}

Weight unit(int dim, int i, std::int64_t c = 1) {
  Weight w(static_cast<std::size_t>(dim), 0);
  w[static_cast<std::size_t>(i)] = c;
  return w;
}

[[noreturn]] void unsupported(const LieAlgebraId& a, RepKind k) {
  throw UnsupportedRepresentationError("representation " + to_string(k) + " of " + to_string(a) +
                                       " is not supported");
}

// Exceptional simple roots, Bourbaki numbering. E6/E7 sit inside the E8
// lattice; all coordinates doubled so that the half-integral roots are integral.
std::vector<Weight> e8_simple_doubled(int count) {
  std::vector<Weight> s;
  s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  s.push_back({2, 2, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 6; ++i) {
    Weight w(8, 0);
    w[static_cast<std::size_t>(i)] = -2;
    w[static_cast<std::size_t>(i + 1)] = 2;
    s.push_back(w);
  }
  s.resize(static_cast<std::size_t>(count));
  return s;
}

// Dynkin labels of a dominant weight given in the same coordinates as the roots.
std::vector<int> dynkin_labels(const std::vector<Weight>& simple, const Weight& dominant) {
  std::vector<int> labels;
  for (const auto& a : simple) labels.push_back(static_cast<int>(coroot_pairing(dominant, a)));
  return labels;
}

std::vector<Weight> positive_roots(const std::vector<Weight>& simple) {
  const auto all = root_system(simple);
  const std::set<Weight> roots(all.begin(), all.end());
  std::set<Weight> pos(simple.begin(), simple.end());
  std::vector<Weight> frontier(simple.begin(), simple.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& r : frontier) {
      for (const auto& a : simple) {
        auto s = axpy(r, 1, a);
        if (roots.count(s) && pos.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return {pos.begin(), pos.end()};
}

// Highest root (adjoint) or highest short root of a simple root system.
Weight highest_root(const std::vector<Weight>& simple, bool short_only) {
  auto pos = positive_roots(simple);
  std::int64_t min_len = dot(pos.front(), pos.front());
  for (const auto& r : pos) min_len = std::min(min_len, dot(r, r));
  Weight two_rho(simple.front().size(), 0);
  for (const auto& r : pos) two_rho = axpy(two_rho, 1, r);
  const Weight* best = nullptr;
  for (const auto& r : pos) {
    if (short_only && dot(r, r) != min_len) continue;
    if (!best || dot(r, two_rho) > dot(*best, two_rho)) best = &r;
  }
  return *best;
}

WeightSystem exceptional_weights(const LieAlgebraId& a, RepKind kind, std::size_t expected_dim) {
  const auto simple = simple_roots(a);
  std::vector<int> labels;
  switch (kind) {
    case RepKind::adjoint:
      labels = dynkin_labels(simple, highest_root(simple, false));
      break;
    case RepKind::dim7_g2:
    case RepKind::dim26_f4:
      labels = dynkin_labels(simple, highest_root(simple, true));
      break;
    case RepKind::dim27_e6:
      labels = {1, 0, 0, 0, 0, 0};
      break;
    case RepKind::dim56_e7:
      labels = {0, 0, 0, 0, 0, 0, 1};
      break;
    default:
      unsupported(a, kind);
  }
  auto module = weights_from_highest(simple, labels);
  if (module.weights.dimension() != expected_dim) {
    throw Error("internal: " + to_string(kind) + " of " + to_string(a) + " generated " +
                std::to_string(module.weights.dimension()) + " weights, expected " +
                std::to_string(expected_dim));
  }
  return std::move(module.weights);
}

const WeightSystem& cached_exceptional(const LieAlgebraId& a, RepKind kind) {
  // Function-local statics: initialised once, then read-only.
  switch (a.family) {
    case Family::g2:
      if (kind == RepKind::adjoint) {
        static const auto w = exceptional_weights(a, kind, 14);
        return w;
      } else {
        static const auto w = exceptional_weights(a, RepKind::dim7_g2, 7);
        return w;
      }
    case Family::f4:
      if (kind == RepKind::adjoint) {
        static const auto w = exceptional_weights(a, kind, 52);
        return w;
      } else {
        static const auto w = exceptional_weights(a, RepKind::dim26_f4, 26);
        return w;
      }
    case Family::e6:
      if (kind == RepKind::adjoint) {
        static const auto w = exceptional_weights(a, kind, 78);
        return w;
      } else {
        static const auto w = exceptional_weights(a, RepKind::dim27_e6, 27);
        return w;
      }
    case Family::e7:
      if (kind == RepKind::adjoint) {
        static const auto w = exceptional_weights(a, kind, 133);
        return w;
      } else {
        static const auto w = exceptional_weights(a, RepKind::dim56_e7, 56);
        return w;
      }
    case Family::e8: {
      static const auto w = exceptional_weights(a, RepKind::adjoint, 248);
      return w;
    }
    default:
      unsupported(a, kind);
  }
}

// Which kind an exceptional `fund` or an so `fund` resolves to.
RepKind canonical_kind(const LieAlgebraId& a, RepKind kind) {
  if (kind != RepKind::fund) return kind;
  switch (a.family) {
    case Family::so: return RepKind::vect;
    case Family::g2: return RepKind::dim7_g2;
    case Family::f4: return RepKind::dim26_f4;
    case Family::e6: return RepKind::dim27_e6;
    case Family::e7: return RepKind::dim56_e7;
    case Family::e8: return RepKind::adjoint;
    default: return kind;
  }
}

// Lambda^2 of a weight multiset: sums over unordered pairs of distinct slots.
std::vector<Weight> antisymmetric_square(const std::vector<Weight>& v) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) out.push_back(axpy(v[i], 1, v[j]));
  return out;
}

WeightSystem su_weights(int n, RepKind kind) {
  // Sum-zero hyperplane of Z^n, rescaled by n so that fund is integral.
  const Weight ones(static_cast<std::size_t>(n), 1);
  std::vector<Weight> fund;
  for (int i = 0; i < n; ++i) fund.push_back(axpy(unit(n, i, n), -1, ones));
  WeightSystem ws{n, {}};
  switch (kind) {
    case RepKind::fund:
      ws.weights = fund;
      break;
    case RepKind::adjoint:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) ws.weights.push_back(axpy(unit(n, i, n), -n, unit(n, j)));
      for (int i = 0; i + 1 < n; ++i) ws.weights.emplace_back(static_cast<std::size_t>(n), 0);
      break;
    case RepKind::lambda2:
      if (n < 4) unsupported(LieAlgebraId::su(n), kind);
      ws.weights = antisymmetric_square(fund);
      break;
    default:
      unsupported(LieAlgebraId::su(n), kind);
  }
  return ws;
}

WeightSystem sp_weights(int k, RepKind kind) {
  std::vector<Weight> fund;
  for (int i = 0; i < k; ++i) {
    fund.push_back(unit(k, i, 1));
    fund.push_back(unit(k, i, -1));
  }
  WeightSystem ws{k, {}};
  switch (kind) {
    case RepKind::fund:
      ws.weights = fund;
      break;
    case RepKind::adjoint: {
      // Sym^2 of the fundamental.
      for (std::size_t i = 0; i < fund.size(); ++i)
        for (std::size_t j = i; j < fund.size(); ++j) ws.weights.push_back(axpy(fund[i], 1, fund[j]));
      break;
    }
    case RepKind::lambda2:
      ws.weights = antisymmetric_square(fund);
      break;
    case RepKind::lambda2_traceless: {
      if (k < 2) unsupported(LieAlgebraId::sp(k), kind);
      ws.weights = antisymmetric_square(fund);
      // Remove the symplectic trace: one copy of the zero weight.
      const Weight zero(static_cast<std::size_t>(k), 0);
      ws.weights.erase(std::find(ws.weights.begin(), ws.weights.end(), zero));
      break;
    }
    default:
      unsupported(LieAlgebraId::sp(k), kind);
  }
  return ws;
}

WeightSystem so_weights(int m, RepKind kind) {
  const int r = m / 2;
  const bool odd = (m % 2) == 1;
  // Coordinates doubled so spinor weights (+-1/2, ...) are integral.
  std::vector<Weight> vect;
  for (int i = 0; i < r; ++i) {
    vect.push_back(unit(r, i, 2));
    vect.push_back(unit(r, i, -2));
  }
  if (odd) vect.emplace_back(static_cast<std::size_t>(r), 0);
  WeightSystem ws{r, {}};
  switch (kind) {
    case RepKind::vect:
      ws.weights = vect;
      break;
    case RepKind::adjoint:
      ws.weights = antisymmetric_square(vect);
      break;
    case RepKind::spin:
    case RepKind::spin_plus_minus: {
      if ((kind == RepKind::spin) != odd) unsupported(LieAlgebraId::so(m), kind);
      if (r > 16) unsupported(LieAlgebraId::so(m), kind);
      for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        const int minus = std::popcount(mask);
        if (!odd && minus % 2 != 0) continue;
        Weight w(static_cast<std::size_t>(r), 1);
        for (int i = 0; i < r; ++i)
          if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -1;
        ws.weights.push_back(std::move(w));
      }
      break;
    }
    default:
      unsupported(LieAlgebraId::so(m), kind);
  }
  return ws;
}

}  // namespace

void check_algebra(const LieAlgebraId& a) {
  const auto bad = [&](const char* what) {
    throw InvalidAlgebraError("invalid algebra " + to_string(a) + ": " + what);
  };
  switch (a.family) {
    case Family::su:
      if (a.param < 2) bad("su(n) needs n >= 2");
      break;
    case Family::sp:
      if (a.param < 1) bad("sp(k) needs k >= 1");
      break;
    case Family::so:
      if (a.param < 7) bad("so(m) needs m >= 7");
      break;
    default:
      if (a.param != 0) bad("no parameter expected");
  }
}

bool simply_laced(const LieAlgebraId& a) {
  switch (a.family) {
    case Family::sp:
    case Family::g2:
    case Family::f4:
      return false;
    case Family::so:
      return a.param % 2 == 0;
    default:
      return true;
  }
}

std::string to_string(const LieAlgebraId& a) {
  switch (a.family) {
    case Family::su: return "su(" + std::to_string(a.param) + ")";
    case Family::sp: return "sp(" + std::to_string(a.param) + ")";
    case Family::so: return "so(" + std::to_string(a.param) + ")";
    case Family::g2: return "g2";
    case Family::f4: return "f4";
    case Family::e6: return "e6";
    case Family::e7: return "e7";
    case Family::e8: return "e8";
    case Family::u1: return "u1";
    case Family::trivial: return "trivial";
  }
  return "?";
}

LieAlgebraId parse_algebra(const std::string& text) {
  static const std::map<std::string, Family> fixed = {
      {"g2", Family::g2}, {"f4", Family::f4}, {"e6", Family::e6},           {"e7", Family::e7},
      {"e8", Family::e8}, {"u1", Family::u1}, {"trivial", Family::trivial},
  };
  if (auto it = fixed.find(text); it != fixed.end()) return {it->second, 0};
  static const std::map<std::string, Family> classical = {
      {"su", Family::su}, {"sp", Family::sp}, {"so", Family::so}};
  if (text.size() > 4 && text[2] == '(' && text.back() == ')') {
    if (auto it = classical.find(text.substr(0, 2)); it != classical.end()) {
      const auto digits = text.substr(3, text.size() - 4);
      if (!digits.empty() && digits.size() < 5 &&
          std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        LieAlgebraId a{it->second, std::stoi(digits)};
        check_algebra(a);
        return a;
      }
    }
  }
  throw ParseError("unknown algebra '" + text + "'", "");
}

namespace {
const std::vector<std::pair<RepKind, const char*>>& kind_names() {
  static const std::vector<std::pair<RepKind, const char*>> names = {
      {RepKind::adjoint, "adjoint"},
      {RepKind::fund, "fund"},
      {RepKind::lambda2, "lambda2"},
      {RepKind::lambda2_traceless, "lambda2_traceless"},
      {RepKind::vect, "vect"},
      {RepKind::spin, "spin"},
      {RepKind::spin_plus_minus, "spin_plus_minus"},
      {RepKind::dim7_g2, "dim7_g2"},
      {RepKind::dim26_f4, "dim26_f4"},
      {RepKind::dim27_e6, "dim27_e6"},
      {RepKind::dim56_e7, "dim56_e7"},
  };
  return names;
}
}  // namespace

std::string to_string(RepKind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "?";
}

RepKind parse_rep_kind(const std::string& text) {
  for (const auto& [kind, name] : kind_names())
    if (text == name) return kind;
  throw ParseError("unknown representation '" + text + "'", "");
}

std::string to_string(const RepLabel& r) {
  std::string s;
  if (r.multiplicity != 1) s += to_string(r.multiplicity) + "*";
  if (r.half_hyper) s += "half:";
  return s + to_string(r.kind);
}

std::string to_string(const RepSum& r) {
  std::string s;
  for (const auto& l : r) {
    if (!s.empty()) s += "+";
    s += to_string(l);
  }
  return s;
}

RepSum parse_rep_sum(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (compact.empty()) throw ParseError("empty representation", "");
  RepSum out;
  std::size_t start = 0;
  while (start <= compact.size()) {
    auto end = compact.find('+', start);
    if (end == std::string::npos) end = compact.size();
    std::string term = compact.substr(start, end - start);
    if (term.empty()) throw ParseError("empty term in '" + text + "'", "");
    RepLabel label;
    if (auto star = term.find('*'); star != std::string::npos) {
      label.multiplicity = parse_rational(term.substr(0, star));
      if (label.multiplicity <= 0) throw ParseError("multiplicity must be positive", "");
      term = term.substr(star + 1);
    }
    if (term.rfind("half:", 0) == 0) {
      label.half_hyper = true;
      term = term.substr(5);
    }
    label.kind = parse_rep_kind(term);
    out.push_back(label);
    start = end + 1;
  }
  return out;
}

bool half_hyper_allowed(const LieAlgebraId& a, RepKind kind) {
  const auto k = canonical_kind(a, kind);
  switch (a.family) {
    case Family::sp: return k == RepKind::fund;
    case Family::so:
      return (a.param == 11 && k == RepKind::spin) || (a.param == 12 && k == RepKind::spin_plus_minus);
    case Family::e7: return k == RepKind::dim56_e7;
    default: return false;
  }
}

std::size_t WeightSystem::zero_weight_multiplicity() const {
  return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
  }));
}

int dim_algebra(const LieAlgebraId& a) {
  check_algebra(a);
  switch (a.family) {
    case Family::su: return a.param * a.param - 1;
    case Family::sp: return 2 * a.param * a.param + a.param;
    case Family::so: return a.param * (a.param - 1) / 2;
    case Family::u1: return 1;
    case Family::trivial: return 0;
    default:
      return static_cast<int>(cached_exceptional(a, RepKind::adjoint).dimension());
  }
}

int rank_algebra(const LieAlgebraId& a) {
  check_algebra(a);
  switch (a.family) {
    case Family::su: return a.param - 1;
    case Family::sp: return a.param;
    case Family::so: return a.param / 2;
    case Family::g2: return 2;
    case Family::f4: return 4;
    case Family::e6: return 6;
    case Family::e7: return 7;
    case Family::e8: return 8;
    case Family::u1: return 1;
    case Family::trivial: return 0;
  }
  return 0;
}

WeightSystem weight_system(const LieAlgebraId& a, RepKind kind) {
  check_algebra(a);
  const auto k = canonical_kind(a, kind);
  switch (a.family) {
    case Family::su: return su_weights(a.param, k);
    case Family::sp: return sp_weights(a.param, k);
    case Family::so: return so_weights(a.param, k);
    case Family::u1:
      if (k == RepKind::adjoint) return {1, {{0}}};
      if (k == RepKind::fund) return {1, {{1}}};
      unsupported(a, kind);
    case Family::trivial:
      return {0, {}};
    default: {
      const bool ok =
          k == RepKind::adjoint || (a.family == Family::g2 && k == RepKind::dim7_g2) ||
          (a.family == Family::f4 && k == RepKind::dim26_f4) ||
          (a.family == Family::e6 && k == RepKind::dim27_e6) ||
          (a.family == Family::e7 && k == RepKind::dim56_e7);
      if (!ok) unsupported(a, kind);
      return cached_exceptional(a, k);
    }
  }
}

WeightSystem weight_system(const LieAlgebraId& a, const RepLabel& r) { return weight_system(a, r.kind); }

namespace {
Rational label_factor(const LieAlgebraId& a, const RepLabel& r) {
  if (r.multiplicity < 0) throw UnsupportedRepresentationError("negative multiplicity");
  if (r.half_hyper && a.family != Family::trivial && !half_hyper_allowed(a, r.kind)) {
    throw UnsupportedRepresentationError("half-hypermultiplet not allowed for " + to_string(r.kind) +
                                         " of " + to_string(a));
  }
  return r.half_hyper ? r.multiplicity / 2 : r.multiplicity;
}
}  // namespace

Rational dim_rep(const LieAlgebraId& a, const RepLabel& r) {
  const auto ws = weight_system(a, r);
  return Rational(static_cast<std::int64_t>(ws.dimension())) * label_factor(a, r);
}

Rational dim_rep(const LieAlgebraId& a, const RepSum& r) {
  Rational s = 0;
  for (const auto& l : r) s += dim_rep(a, l);
  return s;
}

Rational charged_dim(const LieAlgebraId& a, const RepLabel& r) {
  const auto ws = weight_system(a, r);
  const auto charged = static_cast<std::int64_t>(ws.dimension() - ws.zero_weight_multiplicity());
  return Rational(charged) * label_factor(a, r);
}

Rational charged_dim(const LieAlgebraId& a, const RepSum& r) {
  Rational s = 0;
  for (const auto& l : r) s += charged_dim(a, l);
  return s;
}

AlgebraTotals algebra_totals(const GaugeAlgebra& g) {
  AlgebraTotals t{g.abelian_rank, g.abelian_rank};
  for (const auto& f : g.nonabelian_factors) {
    t.dim += dim_algebra(f);
    t.rank += rank_algebra(f);
  }
  return t;
}

std::vector<Weight> simple_roots(const LieAlgebraId& a) {
  check_algebra(a);
  std::vector<Weight> s;
  const int n = a.param;
  switch (a.family) {
    case Family::su:
      for (int i = 0; i + 1 < n; ++i) s.push_back(axpy(unit(n, i), -1, unit(n, i + 1)));
      return s;
    case Family::sp:
      for (int i = 0; i + 1 < n; ++i) s.push_back(axpy(unit(n, i), -1, unit(n, i + 1)));
      s.push_back(unit(n, n - 1, 2));
      return s;
    case Family::so: {
      const int r = n / 2;
      for (int i = 0; i + 1 < r; ++i) s.push_back(axpy(unit(r, i), -1, unit(r, i + 1)));
      if (n % 2 == 1) {
        s.push_back(unit(r, r - 1));
      } else {
        s.push_back(axpy(unit(r, r - 2), 1, unit(r, r - 1)));
      }
      return s;
    }
    case Family::g2:
      return {{1, -1, 0}, {-2, 1, 1}};
    case Family::f4:
      return {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    case Family::e6: return e8_simple_doubled(6);
    case Family::e7: return e8_simple_doubled(7);
    case Family::e8: return e8_simple_doubled(8);
    default:
      throw InvalidAlgebraError(to_string(a) + " has no root system");
  }
}

std::vector<Weight> root_system(const std::vector<Weight>& simple) {
  std::set<Weight> roots(simple.begin(), simple.end());
  std::vector<Weight> frontier(simple.begin(), simple.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& r : frontier) {
      for (const auto& a : simple) {
        auto img = axpy(r, -coroot_pairing(r, a), a);
        if (roots.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

HighestWeightModule weights_from_highest(const std::vector<Weight>& simple,
                                         const std::vector<int>& dynkin_labels) {
  const std::size_t rank = simple.size();
  if (rank == 0 || dynkin_labels.size() != rank) throw Error("dynkin label count mismatch");
  const std::size_t dim = simple.front().size();

  // Solve sum_j c_j <alpha_j, alpha_i^vee> = label_i for the highest weight
  // lambda = sum_j c_j alpha_j, by Gauss-Jordan over Q.
  std::vector<std::vector<Q>> m(rank, std::vector<Q>(rank + 1));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j)
      m[i][j] = Q(2 * dot(simple[j], simple[i]), dot(simple[i], simple[i]));
    m[i][rank] = dynkin_labels[i];
  }
  for (std::size_t col = 0; col < rank; ++col) {
    std::size_t piv = col;
    while (piv < rank && m[piv][col] == 0) ++piv;
    if (piv == rank) throw Error("degenerate Cartan matrix");
    std::swap(m[piv], m[col]);
    const Q p = m[col][col];
    for (auto& v : m[col]) v /= p;
    for (std::size_t r = 0; r < rank; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Q f = m[r][col];
      for (std::size_t c = col; c <= rank; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < rank; ++i) scale = std::lcm(scale, to_int64(Q(denominator(m[i][rank]))));

  std::vector<Weight> simple_s;
  for (const auto& a : simple) simple_s.push_back(scaled(a, scale));
  Weight lambda(dim, 0);
  for (std::size_t j = 0; j < rank; ++j) {
    lambda = axpy(lambda, to_int64(m[j][rank] * scale), simple[j]);
  }

  const auto pos = positive_roots(simple_s);
  Weight two_rho(dim, 0);
  for (const auto& r : pos) two_rho = axpy(two_rho, 1, r);

  // Saturated weight set generated by lambda.
  std::set<Weight> set{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (const auto& a : pos) {
        const auto p = coroot_pairing(mu, a);
        const std::int64_t step = p > 0 ? -1 : 1;
        for (std::int64_t k = 1; k <= (p > 0 ? p : -p); ++k) {
          auto w = axpy(mu, step * k, a);
          if (set.insert(w).second) next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }

  // Freudenthal, processing weights from the top down.
  std::vector<Weight> order(set.begin(), set.end());
  const auto depth = [&](const Weight& mu) { return dot(axpy(lambda, -1, mu), two_rho); };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& x, const Weight& y) { return depth(x) < depth(y); });
  std::map<Weight, std::int64_t> mult;
  const auto lambda_sq = dot(lambda, lambda);
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (const auto& a : pos) {
      for (Weight up = axpy(mu, 1, a);; up = axpy(up, 1, a)) {
        auto it = mult.find(up);
        if (it == mult.end()) break;
        num += it->second * dot(up, a);
      }
    }
    num *= 2;
    const auto den = lambda_sq - dot(mu, mu) + dot(two_rho, axpy(lambda, -1, mu));
    if (den <= 0 || num % den != 0) throw Error("internal: non-integral Freudenthal multiplicity");
    mult[mu] = num / den;
  }

  HighestWeightModule out;
  out.scale = scale;
  out.weights.ambient_rank = static_cast<int>(dim);
  for (const auto& [w, k] : mult)
    for (std::int64_t i = 0; i < k; ++i) out.weights.weights.push_back(w);
  return out;
}

}  // namespace cyspec
