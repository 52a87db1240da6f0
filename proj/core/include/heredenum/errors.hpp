#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heredenum {

// Unsupported class/mode pair or a reduction applied to a class that does not
// allow it.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input does not satisfy an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Always a bug or a violated solver contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested size is beyond what an operation is built for.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace heredenum
