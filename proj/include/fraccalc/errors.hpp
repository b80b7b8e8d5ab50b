#ifndef FRACCALC_ERRORS_HPP
#define FRACCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fraccalc {

// Input outside the mathematical domain of an operation (bad exponent,
// non-positive gamma argument, singular boundary value, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Derivative parameter set violates the admissibility inequalities.
class SpecError : public std::invalid_argument {
public:
  explicit SpecError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Integral equation has no solution in the working function class.
class NotSolvableError : public std::runtime_error {
public:
  explicit NotSolvableError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested feature is deliberately out of scope for the component.
class UnsupportedError : public std::runtime_error {
public:
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed expression text; message carries the offending position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

}  // namespace fraccalc

#endif
