#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input.  offset is a byte offset into the parsed text and
// line is 1-based (0 when the input is a single line).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0);
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid circuit, QBF or subset-sum instance.
class MalformedInstance : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NondeterministicMachine : public Error {
 public:
  using Error::Error;
};

}  // namespace pathcheck
