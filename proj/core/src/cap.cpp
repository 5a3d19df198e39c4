#include "kforms/cap.hpp"

namespace kforms {

namespace {

void require_odd_base(const Form& a, const char* what) {
    if (a.cylinder())
        throw DimensionMismatch(std::string(what) + ": cylinder form not allowed");
    if (!a.is_odd())
        throw DimensionMismatch(std::string(what) + ": form must be odd");
}

void require_unit_even(const Form& s, const char* what) {
    if (!s.is_even())
        throw NotInvertible(std::string(what) + ": form must be even");
    if (!(s.degree0() == Scalar::one()))
        throw NotInvertible(std::string(what) + ": constant term must be 1");
}

Rational factorial(unsigned k) {
    mpz_class f = 1;
    for (unsigned j = 2; j <= k; ++j)
        f *= j;
    return Rational(f);
}

// Sum of coeff(k) * nu^k; finite because nu has positive degree. CoeffFn
// must return Rational by value, not a gmp expression template.
template <class CoeffFn>
Form eval_series(const Form& nu, CoeffFn coeff) {
    Form acc = Form::scalar(nu.dim(), Scalar::rational(coeff(0u)), nu.cylinder());
    Form pw = Form::unit(nu.dim(), nu.cylinder());
    for (unsigned k = 1;; ++k) {
        pw = pw * nu;
        if (pw.is_zero())
            break;
        acc += Scalar::rational(coeff(k)) * pw;
    }
    return acc;
}

} // namespace

Form cap_add(const Form& a, const Form& b) {
    require_odd_base(a, "cap_add");
    require_odd_base(b, "cap_add");
    return a + b + a * ext_d(b);
}

Form cap_neg(const Form& a) {
    require_odd_base(a, "cap_neg");
    Form u = Form::unit(a.dim()) + ext_d(a);
    return -(a * omega_plus_inverse(u));
}

Form cap_half(const Form& a) {
    require_odd_base(a, "cap_half");
    Form h = Form::zero(a.dim());
    GaussRat half{frac(1, 2)};
    for (unsigned k = 1; k <= a.dim(); k += 2) {
        Form defect =
            a.graded_component(k) - (h * ext_d(h)).graded_component(k);
        h += half * defect;
    }
    return h;
}

std::pair<Form, Form> real_specialimag_split(const Form& a) {
    require_odd_base(a, "real_specialimag_split");
    Form beta = cap_half(cap_add(a, a.conj()));
    Form gamma = cap_half(cap_add(a, cap_neg(a.conj())));
    return {beta, gamma};
}

bool lambda_real(const Form& a) { return lambda_equal(a, a.conj()); }

bool special_imaginary(const Form& a) {
    return lambda_equal(cap_add(a, a.conj()), Form::zero(a.dim()));
}

Form omega_plus_inverse(const Form& s) {
    require_unit_even(s, "omega_plus_inverse");
    Form nu = s - Form::unit(s.dim(), s.cylinder());
    return eval_series(nu, [](unsigned k) -> Rational {
        return (k & 1) ? Rational(-1) : Rational(1);
    });
}

Form sqrt_plus(const Form& s) {
    require_unit_even(s, "sqrt_plus");
    Form nu = s - Form::unit(s.dim(), s.cylinder());
    // Binomial coefficients binom(1/2, k) via the descending recurrence.
    std::vector<Rational> cs{Rational(1)};
    return eval_series(nu, [cs](unsigned k) mutable -> Rational {
        while (cs.size() <= k) {
            unsigned j = unsigned(cs.size());
            Rational next = cs.back() * frac(3 - 2 * long(j), 2) / Rational(j);
            cs.push_back(next);
        }
        return cs[k];
    });
}

std::pair<Form, Form> modulus_split(const Form& s) {
    require_unit_even(s, "modulus_split");
    Form rho = sqrt_plus(s * s.conj());
    Form theta = omega_plus_inverse(rho) * s;
    return {rho, theta};
}

Form exp_even(const Form& nu) {
    if (!nu.is_even() || !nu.degree0().is_zero())
        throw NotInvertible("exp_even: even form with zero constant term required");
    return eval_series(nu,
                       [](unsigned k) -> Rational { return Rational(1) / factorial(k); });
}

Form phi_map(const Form& a) {
    Form r(a.dim(), a.cylinder());
    for (const auto& [mask, c] : a.terms()) {
        unsigned d = unsigned(std::popcount(mask));
        if (d == 0)
            continue;
        unsigned k = (d + 1) / 2;
        Rational f = factorial(k - 1);
        if (!(k & 1))
            f = -f;
        r.add_term(mask, GaussRat(f) * c);
    }
    return r;
}

Form phi_inv(const Form& a) {
    if (!a.degree0().is_zero())
        throw NotInvertible("phi_inv: degree-0 part must vanish");
    Form r(a.dim(), a.cylinder());
    for (const auto& [mask, c] : a.terms()) {
        unsigned d = unsigned(std::popcount(mask));
        unsigned k = (d + 1) / 2;
        Rational f = 1 / factorial(k - 1);
        if (!(k & 1))
            f = -f;
        r.add_term(mask, GaussRat(f) * c);
    }
    return r;
}

Form exp_coords(const Form& a) {
    require_odd_base(a, "exp_coords");
    Form da = ext_d(a);
    return a * eval_series(da, [](unsigned k) -> Rational {
        return Rational(1) / factorial(k + 1);
    });
}

Form log_coords(const Form& b) {
    require_odd_base(b, "log_coords");
    Form db = ext_d(b);
    return b * eval_series(db, [](unsigned k) -> Rational {
        Rational c = frac(1, k + 1);
        return (k & 1) ? -c : c;
    });
}

Form psi_F(const Form& a) { return exp_coords(phi_map(a)); }

Form psi_G(const Form& b) { return phi_inv(log_coords(b)); }

} // namespace kforms
