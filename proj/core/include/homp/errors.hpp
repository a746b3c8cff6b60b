#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace homp {

// Evaluation hit a point outside an operation's domain (x/0, sqrt of a
// negative number, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched vector/field dimensions.
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an interval contract (e.g. t not in [0, T]).
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Process endpoint does not lie on the target set within tolerance.
struct NotOnTargetError : std::runtime_error {
  explicit NotOnTargetError(const std::string& what) : std::runtime_error(what) {}
};

// A space-time process has cells with w0 below threshold: it has genuinely
// impulsive parts and cannot be mapped back to a strict-sense process.
struct ImpulsiveProcessError : std::runtime_error {
  std::vector<int> cells;  // offending cell indices
  ImpulsiveProcessError(const std::string& what, std::vector<int> bad)
      : std::runtime_error(what), cells(std::move(bad)) {}
};

// Integration produced a non-finite sample.
struct NonFiniteStateError : std::runtime_error {
  explicit NonFiniteStateError(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed; carries 1-based line/column of the failure.
struct ParseError : std::runtime_error {
  int line = 1;
  int column = 1;
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

// Simplex exceeded its iteration cap.
struct SolverStallError : std::runtime_error {
  explicit SolverStallError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homp
