#pragma once

#include <stdexcept>
#include <string>

namespace tcf {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge has the wrong number of vertices for the hypergraph's uniformity.
struct UniformityError : Error { using Error::Error; };

// A vertex label is outside [0, n).
struct LabelError : Error { using Error::Error; };

// An edge lists the same vertex twice.
struct MultisetError : Error { using Error::Error; };

// A size precondition failed (n < k, not enough room for an embedding, ...).
struct SizeError : Error { using Error::Error; };

// A parameter is out of its documented domain.
struct ParamError : Error { using Error::Error; };

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

// Two added edge sets have intersecting (k-1)-shadows.
struct ShadowClashError : Error { using Error::Error; };

// A construction failed its own internal validation; indicates a bug,
// never returned as a silently-wrong object.
struct ConstructionError : Error { using Error::Error; };

// An exhaustive search hit its node budget: the verdict is unknown and is
// never reported as "tight-cycle-free".
struct IndeterminateError : Error { using Error::Error; };

}  // namespace tcf
