#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidlink {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or geometrically degenerate input (coincident strands, bad
/// sample counts, normalized curve too close to a pole).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a loop or Artin word. `offset` is the 0-based character
/// position where parsing stopped.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ValidationError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Quadrature failed to converge, a holonomy was not integral, or branch
/// tracking was violated. Carries the two competing values when relevant.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double first = 0.0, double second = 0.0)
      : Error(what), first_(first), second_(second) {}

  double first() const noexcept { return first_; }
  double second() const noexcept { return second_; }

 private:
  double first_;
  double second_;
};

/// An operation restricted to Brunn paths (both windings zero) was called
/// on a path that winds about a pole.
class GateError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidlink
