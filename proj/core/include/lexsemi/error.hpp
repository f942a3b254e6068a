#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexsemi {

// Base of every error thrown by the library. The CLI maps all of them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid term / point / pair text.
class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kSemantic };

  ParseError(Kind kind, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              (kind == Kind::kSyntax ? "syntax error: " : "semantic error: ") +
              message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// A documented brute-force bound was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside the inputs it is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two points over different terms were compared.
class TermMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No gap partner exists for the point.
class NoPartnerError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The prime does not divide both sides of the pair with infinite multiplicity.
class NotDivisibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A poset-colored term was compared with a term outside the single-eta regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Measured automorphism ratios disagreed; signals an implementation fault.
class InconsistentRatioError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexsemi
