#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is well-formed but meaningless, e.g. the zero polynomial.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class InvalidAlgebraError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRepresentationError : public Error {
 public:
  using Error::Error;
};

class UnknownFiberError : public Error {
 public:
  using Error::Error;
};

/// Syntax errors in polynomial text, rep strings or model documents.
/// `location` is a column (polynomials) or a JSON pointer (models).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

class NotASingularityError : public Error {
 public:
  using Error::Error;
};

/// The local algebra did not stabilise below the degree cap: the germ is
/// either non-isolated or needs a larger cap.
class MilnorInconclusiveError : public Error {
 public:
  MilnorInconclusiveError(const std::string& message, int degree_cap)
      : Error(message), degree_cap_(degree_cap) {}
  int degree_cap() const noexcept { return degree_cap_; }

 private:
  int degree_cap_;
};

class OracleInapplicableError : public Error {
 public:
  using Error::Error;
};

class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyspec
