#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input outside an operation's domain (bad parameters, arity mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A group document or presentation that does not describe a group.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("evaluation budget exceeded: required " + std::to_string(required) + ", budget " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Numeric character-theoretic computation could not be certified.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// Two independent routes disagreed, or a proven theorem failed on inputs
/// meeting its hypotheses. Always an implementation bug.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace wordlab
