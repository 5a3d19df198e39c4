#pragma once

#include <bit>
#include <cstdint>
#include <map>

#include "kforms/scalar.hpp"

namespace kforms {

// Differential form with polynomial coefficients on R^m, or on the cylinder
// R^m x [0,1] when the cylinder flag is set. Generators are tracked as a
// bitmask: bit i (1 <= i <= m) is dx_i, bit 0 is dt and is reserved for
// cylinder forms. Coefficients of base forms never involve t. Terms are kept
// with ascending generator order and no zero coefficients, so structural
// equality is mathematical equality.
class Form {
public:
    using Mask = std::uint32_t;
    static constexpr Mask dt_bit = 1u;
    static Mask dx_bit(unsigned i) { return Mask(1) << i; }

    struct MaskLess {
        bool operator()(Mask a, Mask b) const {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        }
    };
    using Terms = std::map<Mask, Scalar, MaskLess>;

    Form() : dim_(0), cyl_(false) {}
    explicit Form(unsigned dim, bool cylinder = false);

    static Form zero(unsigned dim, bool cylinder = false) { return Form(dim, cylinder); }
    static Form unit(unsigned dim, bool cylinder = false);
    static Form scalar(unsigned dim, const Scalar& s, bool cylinder = false);
    static Form dx(unsigned dim, unsigned i, bool cylinder = false);
    static Form dt(unsigned dim);

    unsigned dim() const { return dim_; }
    bool cylinder() const { return cyl_; }
    const Terms& terms() const { return terms_; }

    void add_term(Mask mask, const Scalar& coeff);

    bool is_zero() const { return terms_.empty(); }
    Scalar degree0() const;
    unsigned max_degree() const;
    bool is_homogeneous(unsigned k) const;
    bool is_even() const; // every term of even degree (zero counts)
    bool is_odd() const;  // every term of odd degree (zero counts)
    Form graded_component(unsigned k) const;
    Form even_part() const;
    Form odd_part() const;

    Form conj() const;
    Form to_cylinder() const;                   // pullback along the projection
    Form restrict_t(const Rational& value) const; // slice t = value; drops dt
    Form fiber_integrate_t() const;             // integrate the dt-part over [0,1]

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a);
    friend Form operator*(const Form& a, const Form& b); // wedge
    friend Form operator*(const Scalar& c, const Form& a);
    friend Form operator*(const GaussRat& c, const Form& a);
    friend bool operator==(const Form& a, const Form& b) {
        return a.dim_ == b.dim_ && a.cyl_ == b.cyl_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    unsigned dim_;
    bool cyl_;
    Terms terms_;

    void check_term(Mask mask, const Scalar& coeff) const;
    // Unvalidated merge for internal hot paths; operands are already valid
    // and the operations preserve validity.
    void merge_term(Mask mask, Scalar&& coeff);
};

Form wedge(const Form& a, const Form& b);
Form ext_d(const Form& a);

// Homotopy operator for the radial contraction of R^m: returns a primitive
// of a closed form with vanishing degree-0 part. Throws NotClosed or
// HasDegreeZero.
Form poincare_primitive(const Form& a);

// Equality in Omega^odd modulo exact forms. On R^m a closed odd form of
// positive degree is exact, so this reduces to closedness of the difference.
// Both inputs must be odd base forms of matching dimension.
bool lambda_equal(const Form& a, const Form& b);

} // namespace kforms
