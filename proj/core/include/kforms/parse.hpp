#pragma once

#include <string>

#include "kforms/form.hpp"

namespace kforms {

// Parses the expression grammar over Q(i)[tau, x1..xm] and the generators
// dx1..dxm:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := pow ('*' pow)*
//   pow    := factor ('^' (NUMBER | factor))*
//   factor := NUMBER | IDENT | '(' expr ')'
// NUMBER is p or p/q (no space around '/'); IDENT is i, tau, t, x<k>, dx<k>,
// dt; '^' with an integer right side is a power, otherwise a wedge synonym
// binding tighter than '*'.
// t and dt are only accepted by the cylinder variant. Throws ParseError with
// 1-based line/column.
Form parse_form(const std::string& src, unsigned dimension);
Form parse_form_cylinder(const std::string& src, unsigned dimension);

// Degree-0 parse, used for matrix entries of gauges and metric factors.
Scalar parse_scalar(const std::string& src, unsigned dimension);

} // namespace kforms
