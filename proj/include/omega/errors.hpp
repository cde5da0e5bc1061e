#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

/// Base of every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or algebra definition violates the structural invariants (unitality, entry syntax).
class InvalidTable : public Error {
 public:
  using Error::Error;
};

/// Division by an element whose left-multiplication map is singular (zero or a zero divisor).
class SingularElement : public Error {
 public:
  using Error::Error;
};

/// A power series hit max_terms before its terms dropped below tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Non-finite coefficient, or an operation outside its algebraic preconditions.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A sample or value lies outside the subalgebra it was declared to live in.
class MalformedSignal : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class ZeroWave : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Parse failure; `position` is the 0-based character offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace omega
