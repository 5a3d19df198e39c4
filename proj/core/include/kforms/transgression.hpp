#pragma once

#include <utility>

#include "kforms/chern.hpp"

namespace kforms {

// Straight-line interpolation (1-t) A0 + t A1 on the cylinder.
ConnectionPath affine_path(const Connection& c0, const Connection& c1);

// Same endpoints, different interior: adds t(1-t) * bump for a matrix of
// base 1-forms. Used to probe path independence up to exact forms.
ConnectionPath perturbed_path(const Connection& c0, const Connection& c1,
                              const FormMatrix& bump);

// Transgression of P along the path: fiber integral of P of the path
// curvature. Satisfies d(result) = P(F1) - P(F0) exactly.
Form cs_additive(const InvPoly& p, const ConnectionPath& path);
Form cs_additive(const InvPoly& p, const Connection& c0, const Connection& c1);
Form cs_additive(const InvPoly& p, const Connection& c0, const Connection& c1,
                 const ConnectionPath& path);

// Multiplicative transgression: the additive one wedged with P(F0)^{-1}.
// Satisfies 1 + d(result) = P(F1) ^ P(F0)^{-1} exactly; P must take values
// with constant term 1.
Form cs_multiplicative(const InvPoly& p, const ConnectionPath& path);
Form cs_multiplicative(const InvPoly& p, const Connection& c0, const Connection& c1);
Form cs_multiplicative(const InvPoly& p, const Connection& c0, const Connection& c1,
                       const ConnectionPath& path);

// The transgression from a connection to its gauge transform is closed (by
// invariance of P), hence exact here; returns (cs, primitive) with
// d(primitive) = cs.
std::pair<Form, Form> gauge_exactness_witness(const InvPoly& p,
                                              const Connection& c,
                                              const Gauge& g);

} // namespace kforms
