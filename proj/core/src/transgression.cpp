#include "kforms/transgression.hpp"

#include "kforms/cap.hpp"

namespace kforms {

namespace {

void require_pair(const Connection& c0, const Connection& c1) {
    if (c0.dim() != c1.dim() || c0.rank() != c1.rank())
        throw DimensionMismatch("transgression endpoints do not match in shape");
}

void require_endpoints(const ConnectionPath& path, const Connection& c0,
                       const Connection& c1) {
    if (path.endpoint0() != c0 || path.endpoint1() != c1)
        throw UsageError("path endpoints do not match the given connections");
}

} // namespace

ConnectionPath affine_path(const Connection& c0, const Connection& c1) {
    require_pair(c0, c1);
    Scalar t = Scalar::t();
    FormMatrix m = (Scalar::one() - t) * c0.matrix().to_cylinder() +
                   t * c1.matrix().to_cylinder();
    return ConnectionPath(m);
}

ConnectionPath perturbed_path(const Connection& c0, const Connection& c1,
                              const FormMatrix& bump) {
    require_pair(c0, c1);
    if (bump.cylinder() || bump.rows() != c0.rank() || bump.cols() != c0.rank() ||
        bump.dim() != c0.dim() || !bump.entries_homogeneous(1))
        throw DimensionMismatch("path perturbation must be a square matrix of base 1-forms");
    Scalar t = Scalar::t();
    FormMatrix m = affine_path(c0, c1).matrix();
    m += (t * (Scalar::one() - t)) * bump.to_cylinder();
    return ConnectionPath(m);
}

Form cs_additive(const InvPoly& p, const ConnectionPath& path) {
    return eval_poly(p, curvature(path)).fiber_integrate_t();
}

Form cs_additive(const InvPoly& p, const Connection& c0, const Connection& c1) {
    return cs_additive(p, affine_path(c0, c1));
}

Form cs_additive(const InvPoly& p, const Connection& c0, const Connection& c1,
                 const ConnectionPath& path) {
    require_endpoints(path, c0, c1);
    return cs_additive(p, path);
}

Form cs_multiplicative(const InvPoly& p, const ConnectionPath& path) {
    Form base = eval_poly(p, curvature(path.endpoint0()));
    return cs_additive(p, path) * omega_plus_inverse(base);
}

Form cs_multiplicative(const InvPoly& p, const Connection& c0, const Connection& c1) {
    return cs_multiplicative(p, affine_path(c0, c1));
}

Form cs_multiplicative(const InvPoly& p, const Connection& c0, const Connection& c1,
                       const ConnectionPath& path) {
    require_endpoints(path, c0, c1);
    return cs_multiplicative(p, path);
}

std::pair<Form, Form> gauge_exactness_witness(const InvPoly& p,
                                              const Connection& c,
                                              const Gauge& g) {
    Form cs = cs_additive(p, c, gauge_transform(g, c));
    return {cs, poincare_primitive(cs)};
}

} // namespace kforms
