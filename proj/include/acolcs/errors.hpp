#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acolcs {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An Instance, Alphabet or generated instance violates its invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// An exact oracle refused to run because its state space guard tripped.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A string line used a character that is not in the alphabet line.
class UnknownSymbol : public ParseError {
 public:
  using ParseError::ParseError;
};

// advance() was asked to append a character outside the feasible set.
class InfeasibleChar : public Error {
 public:
  using Error::Error;
};

class EmptyCandidates : public Error {
 public:
  using Error::Error;
};

// A solution scanned for deposits has a step that matches no component.
class InconsistentTrace : public Error {
 public:
  using Error::Error;
};

// A solution cannot be replayed under the construction policy.
class InfeasibleTrace : public Error {
 public:
  using Error::Error;
};

// Lower-bound quality needs the running mean cost strictly above the bound.
class DegenerateAverage : public Error {
 public:
  using Error::Error;
};

// Cross-entropy update with a sample whose qualities sum to zero.
class ZeroMass : public Error {
 public:
  using Error::Error;
};

}  // namespace acolcs
