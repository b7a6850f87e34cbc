#pragma once

#include <stdexcept>
#include <string>

namespace spanner {

// Malformed graph construction: bad vertex ids, self loops, parallel edges,
// non-positive weights on a weighted graph.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance file could not be parsed. `line` is 1-based, or -1 if unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no = -1)
      : std::runtime_error(line_no >= 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  int line;
};

// Algorithm asked to run outside its supported (alpha, weightedness) range.
struct IncompatibleConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cooperative timeout fired inside an algorithm.
struct DeadlineExceeded : std::runtime_error {
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

// A probabilistic construction ran out of attempts.
struct AttemptsExhausted : std::runtime_error {
  explicit AttemptsExhausted(int n)
      : std::runtime_error("no successful attempt in " + std::to_string(n) + " tries"),
        attempts(n) {}
  int attempts;
};

// Simplex could not make progress within numerical tolerances.
struct LpNumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be opened, read, or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spanner
