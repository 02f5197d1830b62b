#pragma once

#include <stdexcept>
#include <string>

namespace ffproj {

// Base for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different moduli or different ambient dimensions.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// Division by zero in F_p.
class ZeroInverse : public Error {
 public:
  using Error::Error;
};

// Parameter outside its admissible range (bad prime, bad dimension, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the caller's work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed textual input; carries a 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotHyperplanes : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class NotABasis : public Error {
 public:
  using Error::Error;
};

// Combined dimension too large for the requested construction.
class DimOverflow : public Error {
 public:
  using Error::Error;
};

// Combined dimension too small for the requested construction.
class DimUnderflow : public Error {
 public:
  using Error::Error;
};

class NotTransverse : public Error {
 public:
  using Error::Error;
};

class MalformedTower : public Error {
 public:
  using Error::Error;
};

// A bound spec was applied to inputs it does not cover.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ffproj
