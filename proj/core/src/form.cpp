#include "kforms/form.hpp"

namespace kforms {

namespace {

void require_same(const Form& a, const Form& b, const char* what) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(what) + ": dimensions differ");
    if (a.cylinder() != b.cylinder())
        throw DimensionMismatch(std::string(what) +
                                ": cylinder and base forms mixed");
}

// Sign of dx_A ^ dx_B for disjoint ascending blocks: parity of the number of
// pairs (a in A, b in B) with a > b.
int block_sign(Form::Mask a, Form::Mask b) {
    int inv = 0;
    Form::Mask rest = a;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inv += std::popcount(b & ((Form::Mask(1) << bit) - 1));
    }
    return (inv & 1) ? -1 : 1;
}

} // namespace

Form::Form(unsigned dim, bool cylinder) : dim_(dim), cyl_(cylinder) {
    if (dim < 1 || dim > 16)
        throw DimensionMismatch("base dimension must be between 1 and 16");
}

Form Form::unit(unsigned dim, bool cylinder) {
    return scalar(dim, Scalar::one(), cylinder);
}

Form Form::scalar(unsigned dim, const Scalar& s, bool cylinder) {
    Form f(dim, cylinder);
    f.add_term(0, s);
    return f;
}

Form Form::dx(unsigned dim, unsigned i, bool cylinder) {
    Form f(dim, cylinder);
    f.add_term(dx_bit(i), Scalar::one());
    return f;
}

Form Form::dt(unsigned dim) {
    Form f(dim, true);
    f.add_term(dt_bit, Scalar::one());
    return f;
}

void Form::check_term(Mask mask, const Scalar& coeff) const {
    if (mask >= (Mask(1) << (dim_ + 1)))
        throw DimensionMismatch("generator index exceeds the base dimension");
    if (!cyl_) {
        if (mask & dt_bit)
            throw DimensionMismatch("dt appears in a base form");
        if (coeff.uses(Monomial::slot_t))
            throw DimensionMismatch("t appears in a base form coefficient");
    }
}

void Form::add_term(Mask mask, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    check_term(mask, coeff);
    auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Form::merge_term(Mask mask, Scalar&& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.lower_bound(mask);
    if (it != terms_.end() && it->first == mask) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.emplace_hint(it, mask, std::move(coeff));
    }
}

Scalar Form::degree0() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

unsigned Form::max_degree() const {
    unsigned d = 0;
    for (const auto& [mask, c] : terms_)
        d = std::max<unsigned>(d, std::popcount(mask));
    return d;
}

bool Form::is_homogeneous(unsigned k) const {
    for (const auto& [mask, c] : terms_)
        if (unsigned(std::popcount(mask)) != k)
            return false;
    return true;
}

bool Form::is_even() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) & 1)
            return false;
    return true;
}

bool Form::is_odd() const {
    for (const auto& [mask, c] : terms_)
        if (!(std::popcount(mask) & 1))
            return false;
    return true;
}

Form Form::graded_component(unsigned k) const {
    Form r(dim_, cyl_);
    for (const auto& [mask, c] : terms_)
        if (unsigned(std::popcount(mask)) == k)
            r.add_term(mask, c);
    return r;
}

Form Form::even_part() const {
    Form r(dim_, cyl_);
    for (const auto& [mask, c] : terms_)
        if (!(std::popcount(mask) & 1))
            r.add_term(mask, c);
    return r;
}

Form Form::odd_part() const {
    Form r(dim_, cyl_);
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) & 1)
            r.add_term(mask, c);
    return r;
}

Form Form::conj() const {
    Form r(dim_, cyl_);
    for (const auto& [mask, c] : terms_)
        r.add_term(mask, c.conj());
    return r;
}

Form Form::to_cylinder() const {
    Form r(dim_, true);
    for (const auto& [mask, c] : terms_)
        r.add_term(mask, c);
    return r;
}

Form Form::restrict_t(const Rational& value) const {
    Form r(dim_, false);
    for (const auto& [mask, c] : terms_) {
        if (mask & dt_bit)
            continue;
        r.add_term(mask, c.subst_t(value));
    }
    return r;
}

Form Form::fiber_integrate_t() const {
    if (!cyl_)
        throw DimensionMismatch("fiber integration needs a cylinder form");
    Form r(dim_, false);
    for (const auto& [mask, c] : terms_) {
        if (!(mask & dt_bit))
            continue;
        // dt is the lowest generator, so dt ^ dx_rest carries no extra sign.
        r.add_term(mask & ~dt_bit, c.integrate_t01());
    }
    return r;
}

Form& Form::operator+=(const Form& o) {
    require_same(*this, o, "form sum");
    for (const auto& [mask, c] : o.terms_)
        merge_term(mask, Scalar(c));
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_same(*this, o, "form sum");
    for (const auto& [mask, c] : o.terms_)
        merge_term(mask, -c);
    return *this;
}

Form operator-(const Form& a) {
    Form r(a.dim_, a.cyl_);
    for (const auto& [mask, c] : a.terms_)
        r.merge_term(mask, -c);
    return r;
}

Form operator*(const Form& a, const Form& b) {
    require_same(a, b, "wedge");
    Form r(a.dim_, a.cyl_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb)
                continue;
            Scalar c = ca * cb;
            if (block_sign(ma, mb) < 0)
                c = -c;
            r.merge_term(ma | mb, std::move(c));
        }
    return r;
}

Form operator*(const Scalar& c, const Form& a) {
    Form r(a.dim_, a.cyl_);
    for (const auto& [mask, cc] : a.terms_)
        r.merge_term(mask, c * cc);
    return r;
}

Form operator*(const GaussRat& c, const Form& a) {
    Form r(a.dim_, a.cyl_);
    for (const auto& [mask, cc] : a.terms_)
        r.merge_term(mask, c * cc);
    return r;
}

Form wedge(const Form& a, const Form& b) { return a * b; }

Form ext_d(const Form& a) {
    Form r(a.dim(), a.cylinder());
    for (const auto& [mask, c] : a.terms()) {
        for (unsigned i = 1; i <= a.dim(); ++i) {
            Form::Mask bit = Form::dx_bit(i);
            if (mask & bit)
                continue;
            Scalar dc = c.derivative(Monomial::slot_x(i));
            if (dc.is_zero())
                continue;
            if (std::popcount(mask & (bit - 1)) & 1)
                dc = -dc;
            r.add_term(mask | bit, dc);
        }
        if (a.cylinder() && !(mask & Form::dt_bit)) {
            Scalar dc = c.derivative(Monomial::slot_t);
            if (!dc.is_zero())
                r.add_term(mask | Form::dt_bit, dc);
        }
    }
    return r;
}

Form poincare_primitive(const Form& a) {
    if (a.cylinder())
        throw DimensionMismatch("poincare_primitive needs a base form");
    if (!a.degree0().is_zero())
        throw HasDegreeZero("form has a degree-0 component");
    if (!ext_d(a).is_zero())
        throw NotClosed("form is not closed");
    Form r(a.dim());
    for (const auto& [mask, c] : a.terms()) {
        int p = std::popcount(mask);
        for (const auto& [mono, coef] : c.terms()) {
            Rational weight = frac(1, p + int(mono.x_degree()));
            int l = 0;
            Form::Mask rest = mask;
            while (rest) {
                int bit = std::countr_zero(rest);
                rest &= rest - 1;
                ++l;
                GaussRat cc = GaussRat(weight) * coef;
                if (!(l & 1))
                    cc = -cc;
                Scalar s;
                s.add_term(mono.times(Monomial::var(Monomial::slot_x(unsigned(bit)))), cc);
                r.add_term(mask & ~(Form::Mask(1) << bit), s);
            }
        }
    }
    return r;
}

bool lambda_equal(const Form& a, const Form& b) {
    require_same(a, b, "lambda_equal");
    if (a.cylinder())
        throw DimensionMismatch("lambda_equal is defined for base forms");
    if (!a.is_odd() || !b.is_odd())
        throw DimensionMismatch("lambda_equal is defined for odd forms");
    return ext_d(a - b).is_zero();
}

} // namespace kforms
