#include <doctest.h>

#include "kforms/cap.hpp"
#include "kforms/chern.hpp"
#include "kforms/errors.hpp"
#include "kforms/ktheory.hpp"
#include "kforms/parse.hpp"

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

Triple sample_triple() {
    return Triple(Connection(mat2("x2*dx1", "i*dx3", "0", "x1*dx2")),
                  F("x1*dx2 + i*x3*dx1"));
}

} // namespace

TEST_CASE("triples validate their decoration") {
    CHECK_THROWS_AS(Triple(Connection::zero(2, 3), F("dx1*dx2")),
                    DimensionMismatch);
    CHECK_THROWS_AS(Triple(Connection::zero(2, 3), F("x1*dx2", 4)),
                    DimensionMismatch);
    CHECK(sample_triple().rank() == 2);
}

TEST_CASE("trivial bundles normalize to their rank") {
    Triple t(Connection::zero(3, 4), Form::zero(4));
    KClassMult k = normalize_mult({{1, t}});
    CHECK(k.rank == 3);
    CHECK(k.alpha.is_zero());
    KClassAdd ka = normalize_add({{1, t}});
    CHECK(ka.rank == 3);
    CHECK(ka.alpha.is_zero());
}

TEST_CASE("signs subtract in the normal form") {
    Triple t = sample_triple();
    KClassMult diff = normalize_mult({{1, t}, {-1, t}});
    CHECK(diff.rank == 0);
    CHECK(lambda_equal(diff.alpha, Form::zero(3)));
    CHECK_THROWS_AS(normalize_mult({{2, t}}), UsageError);
    CHECK_THROWS_AS(normalize_mult({}), UsageError);
}

TEST_CASE("odd forms embed as virtual-rank-zero classes") {
    Form g = F("x1*dx2 + x2*x3*dx1");
    CHECK(iota(g).rank == 0);
    CHECK(kclass_equal(iota(g), normalize_mult({{1, Triple(Connection::zero(1, 3), g)},
                                                {-1, Triple(Connection::zero(1, 3), Form::zero(3))}})));
    CHECK_THROWS_AS(iota(F("dx1*dx2")), DimensionMismatch);
}

TEST_CASE("gauge moves do not change the class") {
    Triple t = sample_triple();
    Gauge g(mat2("1", "x1", "0", "1"));
    Connection target = gauge_transform(g, t.conn);
    Triple moved = reldeq_mult(t, target, g);
    CHECK(kclass_equal(normalize_mult({{1, moved}}), normalize_mult({{1, t}})));

    Triple moved_add = reldeq_add(t, target, g);
    CHECK(kclass_equal(normalize_add({{1, moved_add}}), normalize_add({{1, t}})));
}

TEST_CASE("characteristic forms are class invariants") {
    Triple t = sample_triple();
    Triple u(Connection(mat2("0", "x3*dx2", "dx1", "0")), F("x2*dx3"));
    CHECK(star_ctot(relsum_mult(t, u)) == star_ctot(t) * star_ctot(u));
    CHECK(star_ctot(flat_embed(Gauge(mat2("1", "x1", "0", "1")))) ==
          Form::unit(3));
    CHECK(ch_class(relsum_add(t, u)) == ch_class(t) + ch_class(u));
}

TEST_CASE("conjugation of classes is an involution") {
    Triple t = sample_triple();
    Metric m(mat2("1", "i*x2", "0", "1"));
    Triple c = conj_class(t, m);
    Triple cc = conj_class(c, m);
    CHECK(cc.conn == t.conn);
    CHECK(cc.alpha == t.alpha);
}

TEST_CASE("unitary real triples have vanishing obstruction") {
    Metric m(mat2("1", "x1", "0", "1"));
    Connection u = unitarize(sample_triple().conn, m);
    Triple t(u, F("x1*dx2 + x2*dx3"));
    CHECK(borel_star(t, m).is_zero());
    CHECK(special_imaginary(borel_star(sample_triple(), m)));
}

TEST_CASE("coordinate changes compose to the identity") {
    Triple t = sample_triple();
    Triple fg = psiG_class(psiF_class(t));
    CHECK(fg.conn == t.conn);
    CHECK(fg.alpha == t.alpha);
}

TEST_CASE("legacy slot corrects the total chern form") {
    Triple t = sample_triple();
    LegacyTriple l = legacy_convert(t);
    CHECK(l.conn == t.conn);
    CHECK(eval_poly(InvPoly::total_chern(), curvature(t.conn)) - ext_d(l.beta) ==
          star_ctot(t));
    Triple undecorated(t.conn, Form::zero(3));
    CHECK(legacy_convert(undecorated).beta.is_zero());
}

TEST_CASE("character model multiplies by the modified sum") {
    CharModelElem a{F("x1*dx2")};
    CharModelElem b{F("i*x3*dx1")};
    CHECK(char_mult(a, b).alpha == cap_add(a.alpha, b.alpha));
    CHECK(char_conj(char_conj(a)).alpha == a.alpha);
    Triple t = sample_triple();
    CHECK(Form::unit(3) + ext_d(cup_ctot_model(t).alpha) == star_ctot(t));
}
