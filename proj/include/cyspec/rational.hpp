#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace cyspec {

/// Exact rational used for every spectrum and anomaly quantity.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Throws InconsistencyError when `q` is not an integer in int64 range.
std::int64_t to_int64(const Rational& q);

/// "7", "-3" or "1/2". Integers never carry a denominator.
std::string to_string(const Rational& q);

/// Parses "7", "-3" or "1/2". Throws ParseError.
Rational parse_rational(const std::string& text);

/// Integers serialize as JSON numbers, everything else as a "p/q" string.
nlohmann::json to_json_value(const Rational& q);

/// Inverse of to_json_value.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace cyspec
