#pragma once

#include <stdexcept>
#include <string>

namespace kforms {

// Operands live on different base dimensions, or cylinder/base contexts are
// mixed in an unsupported way, or a matrix shape does not fit.
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poincare_primitive was handed a form that is not closed.
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poincare_primitive was handed a form with a nonzero degree-0 component.
struct HasDegreeZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series or matrix inverse needed a unit (constant term 1, or a nonzero
// constant determinant) and did not get one.
struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression or document syntax error; positions are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what), line(line_), column(column_) {}
};

// Malformed input at the tool level: bad flags, bad documents, mismatched
// path endpoints, invalid signs.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kforms
