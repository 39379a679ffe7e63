#include "cyspec/rational.hpp"

#include <limits>

#include "json.hpp"

#include "cyspec/errors.hpp"

namespace cyspec {

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InconsistencyError("expected an integer, got " + to_string(q));
  const auto n = numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InconsistencyError("integer out of range: " + n.str());
  return n.convert_to<std::int64_t>();
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  const auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto as_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("not a rational: '" + s + "'", "");
    return Rational(as_int(s));
  }
  const auto num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("not a rational: '" + s + "'", "");
  const auto d = as_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'", "");
  return Rational(as_int(num), d);
}

nlohmann::json to_json_value(const Rational& q) {
  if (is_integer(q)) {
    const auto n = numerator(q);
    if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
      return n.convert_to<std::int64_t>();
  }
  return to_string(q);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or \"p/q\" string", "");
}

}  // namespace cyspec
