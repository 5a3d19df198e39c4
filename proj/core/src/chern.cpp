#include "kforms/chern.hpp"

#include "kforms/cap.hpp"

namespace kforms {

namespace {

FormMatrix normalized(const FormMatrix& curv) {
    return (Scalar::imag_unit() * Scalar::tau()) * curv;
}

Form eval_total_chern(const FormMatrix& curv) {
    FormMatrix m = FormMatrix::identity(curv.rows(), curv.dim(), curv.cylinder());
    m += normalized(curv);
    return det(m);
}

Form eval_chern_char(const FormMatrix& curv) {
    FormMatrix m = normalized(curv);
    Form acc = Form::scalar(curv.dim(),
                            Scalar::rational(Rational(curv.rows())),
                            curv.cylinder());
    FormMatrix pw = m;
    Rational fact(1);
    for (unsigned j = 1; !pw.is_zero(); ++j) {
        fact *= j;
        acc += Scalar::rational(1 / fact) * pw.trace();
        pw = pw * m;
    }
    return acc;
}

} // namespace

Form eval_poly(const InvPoly& p, const FormMatrix& curv) {
    if (!curv.is_square())
        throw DimensionMismatch("eval_poly needs a square curvature matrix");
    if (!curv.entries_even())
        throw DimensionMismatch("eval_poly needs even curvature entries");
    switch (p.kind) {
    case InvPoly::Kind::total_chern:
        return eval_total_chern(curv);
    case InvPoly::Kind::chern_char:
        return eval_chern_char(curv);
    case InvPoly::Kind::chern_component:
        return eval_total_chern(curv).graded_component(2 * p.component);
    case InvPoly::Kind::product:
        return eval_poly(p.args[0], curv) * eval_poly(p.args[1], curv);
    case InvPoly::Kind::inverse:
        return omega_plus_inverse(eval_poly(p.args[0], curv));
    }
    throw UsageError("unknown invariant polynomial");
}

} // namespace kforms
