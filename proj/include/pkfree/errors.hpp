#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pkfree {

using Vertex = std::uint32_t;

// Input that does not describe a tournament (bad file, bad edge list).
class MalformedInput : public std::invalid_argument {
 public:
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
  MalformedInput(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size computed by the extraction procedures rounded down to zero, or a
// truncation asked for more vertices than a set holds.
class DegenerateSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A runtime check of a proven inequality failed. Always a bug or a broken
// premise, never an expected outcome.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The forbidden path was found; `witness` lists its vertices in path order.
class PatternFound : public std::runtime_error {
 public:
  explicit PatternFound(std::vector<Vertex> witness)
      : std::runtime_error("input contains the forbidden path pattern"),
        witness_(std::move(witness)) {}

  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

}  // namespace pkfree
