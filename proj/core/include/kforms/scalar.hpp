#pragma once

#include <array>
#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "kforms/errors.hpp"

namespace kforms {

using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; all fractions go through here.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Element of Q(i). All arithmetic is exact.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(const Rational& r) : re(r), im(0) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        // Real and purely imaginary coefficients dominate in practice; skip
        // the zero-operand multiplications for them.
        const bool a_real = mpq_sgn(a.im.get_mpq_t()) == 0;
        const bool b_real = mpq_sgn(b.im.get_mpq_t()) == 0;
        if (a_real && b_real)
            return GaussRat(Rational(a.re * b.re));
        if (a_real)
            return GaussRat(a.re * b.re, a.re * b.im);
        if (b_real)
            return GaussRat(a.re * b.re, a.im * b.re);
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// Exponent vector over the fixed slot layout [tau, t, b, x1, x2, ...]. tau is
// a formal constant, t the cylinder coordinate, b a nilpotent probe with
// b^2 = 0 (enforced during Scalar multiplication). Fixed width keeps products
// and comparisons allocation-free; exponents never approach the 16-bit range.
class Monomial {
public:
    static constexpr std::size_t slot_tau = 0;
    static constexpr std::size_t slot_t = 1;
    static constexpr std::size_t slot_b = 2;
    static constexpr std::size_t slot_count = 19; // tau, t, b, x1..x16
    static std::size_t slot_x(unsigned i) { return slot_b + i; } // i >= 1

    Monomial() = default;
    static Monomial var(std::size_t slot, std::uint32_t power = 1);

    std::uint32_t exp(std::size_t slot) const {
        return slot < slot_count ? e_[slot] : 0;
    }
    std::size_t width() const; // slots up to the last nonzero exponent
    bool is_unit() const { return deg_ == 0; }

    std::uint32_t total_degree() const { return deg_; }
    std::uint32_t x_degree() const; // sum of x-slot exponents only

    Monomial times(const Monomial& o) const;
    Monomial with_exp(std::size_t slot, std::uint32_t value) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    // Degree-lexicographic order; total degree first, then the exponent
    // vectors lexicographically.
    static bool deglex_less(const Monomial& a, const Monomial& b);

private:
    std::array<std::uint16_t, slot_count> e_{};
    std::uint32_t deg_ = 0;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::deglex_less(a, b);
    }
};

// Sparse polynomial over Q(i) in tau, t, b, x1..xm with b^2 = 0.
// Zero coefficients are never stored, so structural equality is equality.
class Scalar {
public:
    using Terms = std::map<Monomial, GaussRat, MonomialLess>;

    Scalar() = default;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from(GaussRat(1)); }
    static Scalar from(const GaussRat& c);
    static Scalar rational(const Rational& r) { return from(GaussRat(r)); }
    static Scalar imag_unit() { return from(GaussRat::i()); }
    static Scalar tau() { return variable(Monomial::slot_tau); }
    static Scalar t() { return variable(Monomial::slot_t); }
    static Scalar b() { return variable(Monomial::slot_b); }
    static Scalar x(unsigned i) { return variable(Monomial::slot_x(i)); }
    static Scalar variable(std::size_t slot, std::uint32_t power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_part() const;
    bool uses(std::size_t slot) const;
    std::uint32_t max_x_degree() const;

    const Terms& terms() const { return terms_; }
    void add_term(const Monomial& m, const GaussRat& c);

    Scalar conj() const;
    Scalar derivative(std::size_t slot) const;
    Scalar subst_t(const Rational& value) const;
    Scalar integrate_t01() const; // definite integral of the t-dependence over [0,1]

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const GaussRat& c, const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Terms terms_;
};

} // namespace kforms
