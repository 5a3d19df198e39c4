#include <doctest.h>

#include "kforms/errors.hpp"
#include "kforms/scalar.hpp"

using namespace kforms;

TEST_CASE("frac canonicalizes") {
    CHECK(frac(2, 4) == frac(1, 2));
    CHECK(frac(-3, -6) == frac(1, 2));
    CHECK(frac(3, -6) == frac(-1, 2));
    CHECK(frac(0, 5) == frac(0, 1));
}

TEST_CASE("gaussian rationals form a field") {
    GaussRat a(frac(2, 1), frac(3, 1));
    GaussRat b(frac(-1, 2), frac(5, 3));

    CHECK(a * a.conj() == GaussRat(13));
    CHECK(a * a.inverse() == GaussRat(1));
    CHECK(b * b.inverse() == GaussRat(1));
    CHECK(a * b == b * a);

    GaussRat i(Rational(0), Rational(1));
    CHECK(i * i == GaussRat(-1));
    CHECK(i.inverse() == GaussRat(Rational(0), Rational(-1)));
}

TEST_CASE("monomial slots and degree") {
    Monomial x1 = Monomial::var(Monomial::slot_x(1));
    Monomial tau = Monomial::var(Monomial::slot_tau);
    Monomial m = x1.times(x1).times(tau);

    CHECK(m.exp(Monomial::slot_x(1)) == 2);
    CHECK(m.exp(Monomial::slot_tau) == 1);
    CHECK(m.total_degree() == 3);
    CHECK(m.x_degree() == 2);
    CHECK(Monomial().is_unit());
    CHECK_THROWS_AS(Monomial::var(Monomial::slot_count), DimensionMismatch);
}

TEST_CASE("deglex orders by degree first") {
    Monomial one;
    Monomial x1 = Monomial::var(Monomial::slot_x(1));
    Monomial x1sq = Monomial::var(Monomial::slot_x(1), 2);

    CHECK(Monomial::deglex_less(one, x1));
    CHECK(Monomial::deglex_less(x1, x1sq));
    CHECK_FALSE(Monomial::deglex_less(x1, x1));
    // Within a degree the order is lexicographic in slot order, and it is a
    // strict total order.
    Monomial x2 = Monomial::var(Monomial::slot_x(2));
    CHECK(Monomial::deglex_less(x1, x2) != Monomial::deglex_less(x2, x1));
}

TEST_CASE("polarization slot squares to zero") {
    Scalar b = Scalar::b();
    CHECK((b * b).is_zero());
    CHECK_FALSE((b * Scalar::x(1)).is_zero());
}

TEST_CASE("scalar derivative and substitution") {
    Scalar s = Scalar::x(1) * Scalar::x(1) * Scalar::x(2);
    CHECK(s.derivative(Monomial::slot_x(1)) ==
          GaussRat(2) * (Scalar::x(1) * Scalar::x(2)));
    CHECK(s.derivative(Monomial::slot_x(3)).is_zero());

    Scalar p = Scalar::t() * Scalar::t() + Scalar::t() * Scalar::x(1);
    Scalar at_half = p.subst_t(frac(1, 2));
    CHECK(at_half == Scalar::from(GaussRat(frac(1, 4))) +
                         GaussRat(frac(1, 2)) * Scalar::x(1));
    CHECK_FALSE(at_half.uses(Monomial::slot_t));
}

TEST_CASE("definite t-integral over the unit interval") {
    Scalar p = Scalar::t() * Scalar::t();
    CHECK(p.integrate_t01() == Scalar::from(GaussRat(frac(1, 3))));
    CHECK((Scalar::t() * Scalar::x(1)).integrate_t01() ==
          GaussRat(frac(1, 2)) * Scalar::x(1));
    // t-free scalars integrate to themselves.
    CHECK(Scalar::x(2).integrate_t01() == Scalar::x(2));
}

TEST_CASE("scalar conjugation fixes variables") {
    GaussRat c(frac(2, 1), frac(3, 1));
    Scalar s = c * Scalar::x(1) + Scalar::tau();
    CHECK(s.conj() == c.conj() * Scalar::x(1) + Scalar::tau());
    CHECK(s.conj().conj() == s);
}
