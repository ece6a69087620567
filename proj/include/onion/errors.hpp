#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onion {

// A precondition of an operation was violated by the caller.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An arc or vertex id does not belong to the digraph it is used with.
class structural_error : public contract_violation {
 public:
  using contract_violation::contract_violation;
};

// A lookup (e.g. an anchor arc on a path) failed.
class not_found_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exact oracle refused to run because the instance exceeds its cap.
class oracle_refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line()` is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace onion
