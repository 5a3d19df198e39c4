#include <doctest.h>

#include "kforms/chern.hpp"
#include "kforms/errors.hpp"
#include "kforms/matrix.hpp"
#include "kforms/parse.hpp"
#include "kforms/transgression.hpp"

using namespace kforms;

namespace {

Form F(const std::string& s, unsigned dim = 3) { return parse_form(s, dim); }

FormMatrix mat2(const std::string& a, const std::string& b,
                const std::string& c, const std::string& d,
                unsigned dim = 3) {
    FormMatrix m(2, 2, dim);
    m.at(0, 0) = F(a, dim);
    m.at(0, 1) = F(b, dim);
    m.at(1, 0) = F(c, dim);
    m.at(1, 1) = F(d, dim);
    return m;
}

} // namespace

TEST_CASE("matrix algebra basics") {
    FormMatrix m = mat2("x1", "dx2", "dx1*dx2", "1 + x3*dx1");
    CHECK(FormMatrix::identity(2, 3) * m == m);
    CHECK(m * FormMatrix::identity(2, 3) == m);
    CHECK(m.trace() == F("1 + x1 + x3*dx1"));
    CHECK(m.transpose().transpose() == m);
    CHECK(m.conj_transpose() == m.conj().transpose());
}

TEST_CASE("determinant matches the cofactor expansion") {
    // det is only defined for even entries, where cross terms commute.
    FormMatrix e = mat2("1 + dx1*dx2", "x1", "x2^2", "x3 + dx2*dx3");
    CHECK(det(e) == e.at(0, 0) * e.at(1, 1) - e.at(0, 1) * e.at(1, 0));
    CHECK(det(FormMatrix::identity(3, 3)) == Form::unit(3));
    FormMatrix odd = mat2("dx1", "0", "0", "1");
    CHECK_THROWS_AS(det(odd), DimensionMismatch);
}

TEST_CASE("determinant is multiplicative on blocks") {
    FormMatrix a = mat2("1", "x1*dx2*dx3", "dx2*dx3", "1 + dx1*dx2");
    FormMatrix b = mat2("x2", "dx1*dx3", "0", "1");
    CHECK(det(block_diag(a, b)) == det(a) * det(b));
    CHECK(block_diag(a, b).rows() == 4);
    // Products of even matrices multiply determinants.
    CHECK(det(a * b) == det(a) * det(b));
}

TEST_CASE("adjugate inverse needs a constant unit determinant") {
    FormMatrix g = mat2("1", "x1", "0", "1");
    CHECK(adjugate_inverse(g) * g == FormMatrix::identity(2, 3));
    CHECK(g * adjugate_inverse(g) == FormMatrix::identity(2, 3));
    FormMatrix bad = mat2("x1", "0", "0", "1");
    CHECK_THROWS_AS(adjugate_inverse(bad), NotInvertible);
}

TEST_CASE("curvature of a flat or abelian connection") {
    CHECK(curvature(Connection::zero(2, 3)).is_zero());

    FormMatrix a(1, 1, 3);
    a.at(0, 0) = F("x1*dx2");
    CHECK(curvature(Connection(a)).at(0, 0) == F("dx1*dx2"));

    // A strictly upper triangular 1-form matrix is flat iff its entry is
    // closed after the square drops out.
    FormMatrix n = mat2("0", "dx1", "0", "0");
    CHECK(curvature(Connection(n)).is_zero());
}

TEST_CASE("gauge transforms preserve characteristic forms") {
    FormMatrix gm = mat2("1", "x1", "0", "1");
    Gauge g(gm);
    CHECK(g.matrix() * g.inverse() == FormMatrix::identity(2, 3));

    Connection zero = Connection::zero(2, 3);
    Connection moved = gauge_transform(g, zero);
    CHECK(moved.matrix().at(0, 1) == F("dx1"));
    CHECK(curvature(moved).is_zero());

    Connection c(mat2("x2*dx1", "0", "dx3", "x1*dx2"));
    Form before = eval_poly(InvPoly::total_chern(), curvature(c));
    Form after = eval_poly(InvPoly::total_chern(), curvature(gauge_transform(g, c)));
    CHECK(before == after);
}

TEST_CASE("metric from a unimodular factor") {
    FormMatrix gm = mat2("1", "x1", "0", "1");
    Metric h(gm);
    CHECK(h.h() == mat2("1", "x1", "x1", "1 + x1^2"));
    CHECK(h.h() * h.h_inverse() == FormMatrix::identity(2, 3));
    CHECK(Metric::identity(2, 3).h() == FormMatrix::identity(2, 3));
}

TEST_CASE("adjoint connection under the identity metric") {
    Connection c(mat2("x2*dx1", "i*dx3", "0", "x1*dx2"));
    Metric id = Metric::identity(2, 3);
    // Compatibility reads dh = A^(cT) h + h A*, so at h = 1 the adjoint is
    // minus the conjugate transpose.
    CHECK(adjoint(c, id).matrix() == -(c.matrix().conj_transpose()));
    CHECK(adjoint(adjoint(c, id), id) == c);

    Metric h(mat2("1", "x1", "0", "1"));
    CHECK(adjoint(adjoint(c, h), h) == c);

    Connection u = unitarize(c, h);
    CHECK(adjoint(u, h) == u);
}

TEST_CASE("paths interpolate their endpoints") {
    Connection c0 = Connection::zero(2, 3);
    Connection c1(mat2("x2*dx1", "dx3", "0", "x1*dx2"));
    ConnectionPath p = affine_path(c0, c1);
    CHECK(p.endpoint0() == c0);
    CHECK(p.endpoint1() == c1);
    CHECK(p.at(frac(1, 2)).matrix() ==
          Scalar::from(GaussRat(frac(1, 2))) * c1.matrix());

    FormMatrix bump = mat2("dx1", "0", "0", "dx2");
    ConnectionPath q = perturbed_path(c0, c1, bump);
    CHECK(q.endpoint0() == c0);
    CHECK(q.endpoint1() == c1);
}

TEST_CASE("direct sums operate blockwise") {
    Connection a(mat2("x2*dx1", "0", "0", "x1*dx2"));
    Connection b = Connection::zero(1, 3);
    Connection s = direct_sum(a, b);
    CHECK(s.rank() == 3);
    CHECK(s.matrix().at(2, 2).is_zero());
    CHECK(s.matrix().at(0, 1) == a.matrix().at(0, 1));
}
