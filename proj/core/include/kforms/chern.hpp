#pragma once

#include <vector>

#include "kforms/matrix.hpp"

namespace kforms {

// Invariant polynomial in the curvature, built from the total Chern form and
// the Chern character by components, products, and group inverses.
struct InvPoly {
    enum class Kind { total_chern, chern_char, chern_component, product, inverse };

    Kind kind = Kind::total_chern;
    unsigned component = 0;
    std::vector<InvPoly> args;

    static InvPoly total_chern() { return {}; }
    static InvPoly chern_char() { return {Kind::chern_char, 0, {}}; }
    static InvPoly chern_component(unsigned k) { return {Kind::chern_component, k, {}}; }
    static InvPoly product(InvPoly p, InvPoly q) {
        return {Kind::product, 0, {std::move(p), std::move(q)}};
    }
    static InvPoly inverse(InvPoly p) { return {Kind::inverse, 0, {std::move(p)}}; }
};

// Evaluates the polynomial on a curvature matrix. Each curvature slot is
// scaled by i*tau, tau standing for the 1/(2 pi) normalization:
//   total_chern     det(Id + i tau F)
//   chern_char      sum_j trace((i tau F)^j) / j!
//   chern_component degree-2k part of the total Chern form
//   product         wedge of the factors
//   inverse         group inverse; needs constant term exactly 1
Form eval_poly(const InvPoly& p, const FormMatrix& curv);

} // namespace kforms
