#pragma once

#include <stdexcept>
#include <string>

namespace crowns {

// Input validation failure while constructing a graph.
class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    OutOfRange,
    NotThreeDistinct,
    LinearityViolation,
    DuplicateEdge,
    EdgeNotInGraph,
  };

  GraphError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Text graph format error; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A caller handed an operation something outside its stated preconditions.
class PreconditionViolated : public std::logic_error {
 public:
  explicit PreconditionViolated(const std::string& message) : std::logic_error(message) {}
};

// An internal deduction that is supposed to be forced failed; this always
// indicates a bug, never bad input.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& message) : std::logic_error(message) {}
};

// The selected weight scheme does not apply to the input (scheme 2 needs at
// most two vertices of degree >= 6).
class SchemeInapplicable : public std::runtime_error {
 public:
  explicit SchemeInapplicable(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace crowns
