#pragma once

#include <stdexcept>
#include <string>

namespace focp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition or argument outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// q(t) < 0 or r(t) <= 0 at a sampled point.
struct PositivityError : Error {
    using Error::Error;
};

// A coefficient evaluated to NaN or infinity.
struct EvaluationError : Error {
    using Error::Error;
};

// Elimination hit a pivot below the configured threshold.
struct SingularSystemError : Error {
    using Error::Error;
};

// Sweep iteration ran out of iterations; carries the residual of the
// last iterate so callers can decide whether to fall back to direct.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& message, double residual)
        : Error(message), last_residual(residual) {}
    double last_residual;
};

// Candidate trajectory and discrete system disagree on the grid.
struct GridMismatchError : Error {
    using Error::Error;
};

// Problem-file syntax error; line is 1-based, 0 when the error is not
// tied to a specific line (e.g. a missing required key).
struct ParseError : Error {
    ParseError(const std::string& message, int line_number)
        : Error(message), line(line_number) {}
    int line;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace focp
