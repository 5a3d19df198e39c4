#pragma once

#include <string>

#include "kforms/form.hpp"
#include "kforms/matrix.hpp"

namespace kforms {

// Canonical plain-text rendering: terms ordered by generator degree, then
// generator set, then monomial order; coefficients as p/q or (a+b*i).
// parse_form(render_form(a)) == a bit-exactly.
std::string render_form(const Form& a);
std::string render_scalar(const Scalar& s);
std::string render_gauss(const GaussRat& c);

} // namespace kforms
