#include "cyspec/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <optional>
#include <set>

#include "cyspec/errors.hpp"

namespace cyspec {

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Polynomial::order() const {
  if (terms.empty()) return 0;
  int d = -1;
  for (const auto& [e, c] : terms) {
    const int t = std::accumulate(e.begin(), e.end(), 0);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial r(a.nvars);
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms) r.terms.emplace(e, c * v);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars, b.nvars));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponent e(static_cast<std::size_t>(r.nvars), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial pow(const Polynomial& a, int e) {
  Polynomial r = Polynomial::constant(a.nvars, 1);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

Polynomial derivative(const Polynomial& a, int var) {
  Polynomial r(a.nvars);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : a.terms) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    r.add_term(d, c * e[v]);
  }
  return r;
}

namespace {

constexpr const char* kLetters = "xyzwvu";
constexpr int kMaxExponent = 1000;

struct Tok {
  char ch;
  int column;
};

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) {
    int column = 0;
    for (std::size_t i = 0; i < text.size();) {
      ++column;
      const auto b = static_cast<unsigned char>(text[i]);
      if (b == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        toks_.push_back({'-', column});
        i += 3;
        continue;
      }
      std::size_t len = 1;
      if (b >= 0xF0) len = 4;
      else if (b >= 0xE0) len = 3;
      else if (b >= 0xC0) len = 2;
      if (len == 1 && std::isspace(b)) {
        ++i;
        continue;
      }
      toks_.push_back({len == 1 ? static_cast<char>(b) : '\x01', column});
      i += len;
    }
    end_column_ = column + 1;
  }

  PolyGerm parse() {
    std::vector<std::pair<std::map<int, int>, Rational>> raw;
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail(at_end() ? "expected '+' or '-'" : "unexpected character");
      }
      first = false;
      auto term = parse_term();
      term.second *= sign;
      raw.push_back(std::move(term));
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    }

    std::set<int> used;
    for (const auto& [f, c] : raw)
      for (const auto& [v, e] : f) used.insert(v);
    PolyGerm g;
    g.style = style_.value_or(VarStyle::letters);
    g.vars.assign(used.begin(), used.end());
    g.poly = Polynomial(static_cast<int>(g.vars.size()));
    for (const auto& [f, c] : raw) {
      Exponent e(g.vars.size(), 0);
      for (const auto& [v, k] : f) {
        const auto idx = std::lower_bound(g.vars.begin(), g.vars.end(), v) - g.vars.begin();
        e[static_cast<std::size_t>(idx)] += k;
      }
      g.poly.add_term(e, c);
    }
    if (g.poly.is_zero()) throw InvalidInputError("the zero polynomial has no isolated singularity");
    if (g.poly.order() < 2) {
      throw NotASingularityError("polynomial has a nonzero " +
                                 std::string(g.poly.order() == 0 ? "constant" : "linear") +
                                 " part; the origin is not a singular point");
    }
    return g;
  }

 private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  int end_column_ = 1;
  std::optional<VarStyle> style_;

  bool at_end() const { return pos_ >= toks_.size(); }
  char peek() const { return at_end() ? '\0' : toks_[pos_].ch; }
  int column() const { return at_end() ? end_column_ : toks_[pos_].column; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, "column " + std::to_string(column()));
  }

  BigInt parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    BigInt v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  std::pair<std::map<int, int>, Rational> parse_term() {
    Rational coef = 1;
    std::map<int, int> factors;
    if (peek() == '+' || peek() == '-') {
      // signed coefficient after the joining operator, e.g. "x^2 + -3*y^2"
      const bool neg = peek() == '-';
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient after sign");
      if (neg) coef = -1;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c(parse_uint());
      if (peek() == '/') {
        ++pos_;
        const int den_col = column();
        const BigInt den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", "column " + std::to_string(den_col));
        c /= Rational(den);
      }
      coef *= c;
      if (peek() != '*') {
        if (at_end() || peek() == '+' || peek() == '-') return {factors, coef};
        fail("expected '*' after coefficient");
      }
      ++pos_;
    }
    while (true) {
      parse_factor(factors);
      if (peek() != '*') break;
      ++pos_;
    }
    return {factors, coef};
  }

  void parse_factor(std::map<int, int>& factors) {
    const int col = column();
    const char c = peek();
    const char* hit = c ? std::strchr(kLetters, c) : nullptr;
    if (!hit) fail("expected a variable");
    ++pos_;
    int index = static_cast<int>(hit - kLetters);
    VarStyle st = VarStyle::letters;
    if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
      const BigInt k = parse_uint();
      if (k < 1 || k > 6) throw ParseError("variable index out of range x1..x6", "column " + std::to_string(col));
      index = static_cast<int>(k) - 1;
      st = VarStyle::indexed;
    }
    if (style_ && *style_ != st)
      throw ParseError("letter and indexed variables cannot be mixed", "column " + std::to_string(col));
    style_ = st;
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      const int ecol = column();
      const BigInt k = parse_uint();
      if (k < 1 || k > kMaxExponent)
        throw ParseError("exponent must be a positive integer up to " + std::to_string(kMaxExponent),
                         "column " + std::to_string(ecol));
      e = static_cast<int>(k);
    }
    factors[index] += e;
  }
};

std::string var_name(VarStyle s, int idx) {
  if (s == VarStyle::indexed) return "x" + std::to_string(idx + 1);
  return std::string(1, kLetters[idx]);
}

}  // namespace

PolyGerm parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string to_string(const PolyGerm& g) {
  std::vector<std::pair<Exponent, Rational>> ts(g.poly.terms.begin(), g.poly.terms.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += var_name(g.style, g.vars[i]);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    if (body.empty()) out += to_string(mag);
    else if (mag == 1) out += body;
    else out += to_string(mag) + "*" + body;
  }
  return out.empty() ? "0" : out;
}

PolyGerm make_germ(const Polynomial& p, VarStyle style) {
  if (style == VarStyle::letters && p.nvars > 6) throw InvalidInputError("at most six variables");
  PolyGerm g;
  g.poly = p;
  g.style = style;
  g.vars.resize(static_cast<std::size_t>(p.nvars));
  std::iota(g.vars.begin(), g.vars.end(), 0);
  return g;
}

Polynomial linear_substitution(const Polynomial& f, const std::vector<std::vector<Rational>>& m) {
  const int n = f.nvars;
  std::vector<Polynomial> forms;
  for (int i = 0; i < n; ++i) {
    Polynomial l(n);
    for (int j = 0; j < n; ++j) l = l + m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Polynomial::variable(n, j);
    forms.push_back(l);
  }
  Polynomial r(n);
  for (const auto& [e, c] : f.terms) {
    Polynomial t = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) t = t * pow(forms[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    r = r + t;
  }
  return r;
}

Polynomial disjoint_sum(const Polynomial& f, const Polynomial& g) {
  const int n = f.nvars + g.nvars;
  Polynomial r(n);
  for (const auto& [e, c] : f.terms) {
    Exponent x(static_cast<std::size_t>(n), 0);
    std::copy(e.begin(), e.end(), x.begin());
    r.add_term(x, c);
  }
  for (const auto& [e, c] : g.terms) {
    Exponent x(static_cast<std::size_t>(n), 0);
    std::copy(e.begin(), e.end(), x.begin() + f.nvars);
    r.add_term(x, c);
  }
  return r;
}

}  // namespace cyspec
