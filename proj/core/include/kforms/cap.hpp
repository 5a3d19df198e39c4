#pragma once

#include <utility>

#include "kforms/form.hpp"

namespace kforms {

// Modified sum a + b + a ^ db on odd base forms: associative, unital, with
// inverses; commutative only up to exact forms.
Form cap_add(const Form& a, const Form& b);
Form cap_neg(const Form& a);
Form cap_half(const Form& a); // the unique h with cap_add(h, h) = a

// Splits a into (beta, gamma), beta conjugation-fixed and gamma special
// imaginary, with a = cap_add(beta, gamma) up to exact forms.
std::pair<Form, Form> real_specialimag_split(const Form& a);

bool lambda_real(const Form& a);       // a == conj(a) up to exact forms
bool special_imaginary(const Form& a); // cap_add(a, conj(a)) == 0 up to exact forms

// Even forms with constant term 1 are a group under wedge; the series below
// are exact because the positive-degree part is nilpotent.
Form omega_plus_inverse(const Form& s);
Form sqrt_plus(const Form& s); // unique square root with constant term 1

// (rho, theta) with rho real, theta of modulus one, s = rho ^ theta.
std::pair<Form, Form> modulus_split(const Form& s);

Form exp_even(const Form& nu); // exp of an even form with zero constant term

// Degree rescaling: multiplies components of degree 2k-1 and 2k by
// (-1)^(k-1) (k-1)! and kills degree 0. Intertwines d on odd forms.
Form phi_map(const Form& a);
Form phi_inv(const Form& a); // input must have zero degree-0 part

// Coordinate changes between the modified and the plain sum:
// exp_coords(a) = a ^ F(da) with F(x) = (exp(x)-1)/x,
// log_coords(b) = b ^ G(db) with G(x) = log(1+x)/x; mutually inverse.
Form exp_coords(const Form& a);
Form log_coords(const Form& b);

// phi-twisted coordinate changes; psi_G inverts psi_F up to exact forms.
Form psi_F(const Form& a);
Form psi_G(const Form& b);

} // namespace kforms
