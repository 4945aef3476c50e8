#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toral {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial or problem text. `position` is a 0-based offset
// into the parsed string; `line` is 1-based when known, 0 otherwise.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position, std::size_t line = 0)
      : Error(format(what, position, line)), detail_(what), position_(position), line_(line) {}

  // The message without the location prefix.
  const std::string &detail() const noexcept { return detail_; }

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

private:
  static std::string format(const std::string &what, std::size_t position, std::size_t line) {
    std::string where = line ? "line " + std::to_string(line) + ", column " + std::to_string(position + 1)
                             : "position " + std::to_string(position);
    return "parse error at " + where + ": " + what;
  }

  std::string detail_;
  std::size_t position_;
  std::size_t line_;
};

// Semantically invalid input: zero polynomials, empty lists where a value is
// required, unit generators that define the empty set.
class InputError : public Error {
public:
  using Error::Error;
};

// Mismatched ranks, lengths or matrix shapes; non-unimodular matrices.
class DimensionError : public Error {
public:
  using Error::Error;
};

// The input is well formed but outside what the method handles
// (non-hypersurface residual, enumeration bound exceeded, unsplit torus factor).
class ScopeError : public Error {
public:
  using Error::Error;
};

// Internal data contradicts a caller guarantee: a corrupted certificate,
// a map outside GAff, a generator that is not semi-invariant.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace toral
