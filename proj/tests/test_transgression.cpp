#include <doctest.h>

#include "kforms/cap.hpp"
#include "kforms/chern.hpp"
#include "kforms/errors.hpp"
#include "kforms/parse.hpp"
#include "kforms/transgression.hpp"

using namespace kforms;

namespace {

Form F(const std::string& s, unsigned dim = 3) { return parse_form(s, dim); }

const InvPoly kCtot = InvPoly::total_chern();
const InvPoly kCh = InvPoly::chern_char();

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

const Connection c0(mat2("x2*dx1", "0", "dx3", "x1*dx2"));
const Connection c1(mat2("0", "i*x3*dx1", "dx1", "x2*dx3"));

} // namespace

TEST_CASE("transgression starts at zero and reverses by sign") {
    CHECK(cs_additive(kCh, c0, c0).is_zero());
    CHECK(cs_multiplicative(kCtot, c0, c0).is_zero());
    CHECK(cs_additive(kCh, c1, c0) == -cs_additive(kCh, c0, c1));
    // The multiplicative direction only reverses up to exact forms.
    CHECK(lambda_equal(cs_multiplicative(kCtot, c1, c0),
                       cap_neg(cs_multiplicative(kCtot, c0, c1))));
}

TEST_CASE("additive transgression satisfies the stokes identity") {
    Form cs = cs_additive(kCh, c0, c1);
    CHECK(ext_d(cs) == eval_poly(kCh, curvature(c1)) -
                           eval_poly(kCh, curvature(c0)));
}

TEST_CASE("multiplicative transgression satisfies the ratio identity") {
    Form cs = cs_multiplicative(kCtot, c0, c1);
    Form u = Form::unit(3);
    CHECK((u + ext_d(cs)) * eval_poly(kCtot, curvature(c0)) ==
          eval_poly(kCtot, curvature(c1)));
}

TEST_CASE("additive transgression sums over blocks") {
    Connection d0(mat2("0", "x1*dx3", "0", "x3*dx1"));
    Connection d1(mat2("x1*dx2", "0", "dx2", "0"));
    CHECK(cs_additive(kCh, direct_sum(c0, d0), direct_sum(c1, d1)) ==
          cs_additive(kCh, c0, c1) + cs_additive(kCh, d0, d1));
}

TEST_CASE("gauge orbit of the flat connection transgresses to zero") {
    // det(1 + i tau F(t)) stays 1 along the affine path into a strictly
    // upper triangular flat connection, so the fiber integral vanishes.
    FormMatrix gm = mat2("1", "x1", "0", "1");
    Connection zero = Connection::zero(2, 3);
    Connection moved = gauge_transform(Gauge(gm), zero);
    CHECK(cs_multiplicative(kCtot, zero, moved).is_zero());
}

TEST_CASE("explicit paths must match the endpoints") {
    ConnectionPath p = affine_path(c0, c1);
    CHECK(cs_additive(kCh, c0, c1, p) == cs_additive(kCh, c0, c1));
    CHECK_THROWS_AS(cs_additive(kCh, c1, c0, p), UsageError);
    CHECK_THROWS_AS(cs_multiplicative(kCtot, c1, c0, p), UsageError);
}

TEST_CASE("transgression class is path independent") {
    FormMatrix bump = mat2("x3*dx1", "0", "dx2", "x1*dx3");
    ConnectionPath q = perturbed_path(c0, c1, bump);
    CHECK(lambda_equal(cs_additive(kCh, q), cs_additive(kCh, c0, c1)));
    CHECK(lambda_equal(cs_multiplicative(kCtot, q),
                       cs_multiplicative(kCtot, c0, c1)));
}
