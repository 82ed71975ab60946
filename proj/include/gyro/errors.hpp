#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gyro {

// Malformed input (bad JSON, missing fields, non-integer cells).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a structural invariant of a loop table.
// row/col locate the offending cell when there is one.
class StructureError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  StructureError(const std::string& what, std::size_t row = npos,
                 std::size_t col = npos)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// A continuous-model point outside its open domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Work requested beyond a configured exhaustive bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gyro
