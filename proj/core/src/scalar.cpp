#include "kforms/scalar.hpp"

#include <algorithm>

namespace kforms {

GaussRat GaussRat::inverse() const {
    if (is_zero())
        throw NotInvertible("division by zero in Q(i)");
    Rational n = re * re + im * im;
    return GaussRat(re / n, -im / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Monomial Monomial::var(std::size_t slot, std::uint32_t power) {
    if (slot >= slot_count)
        throw DimensionMismatch("monomial slot out of range");
    Monomial m;
    m.e_[slot] = std::uint16_t(power);
    m.deg_ = power;
    return m;
}

std::size_t Monomial::width() const {
    std::size_t w = slot_count;
    while (w > 0 && e_[w - 1] == 0)
        --w;
    return w;
}

std::uint32_t Monomial::x_degree() const {
    std::uint32_t d = 0;
    for (std::size_t s = slot_b + 1; s < slot_count; ++s)
        d += e_[s];
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    for (std::size_t s = 0; s < slot_count; ++s)
        r.e_[s] = std::uint16_t(e_[s] + o.e_[s]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::with_exp(std::size_t slot, std::uint32_t value) const {
    if (slot >= slot_count)
        throw DimensionMismatch("monomial slot out of range");
    Monomial r = *this;
    r.deg_ = deg_ - r.e_[slot] + value;
    r.e_[slot] = std::uint16_t(value);
    return r;
}

bool Monomial::deglex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_)
        return a.deg_ < b.deg_;
    return a.e_ < b.e_;
}

Scalar Scalar::from(const GaussRat& c) {
    Scalar s;
    s.add_term(Monomial(), c);
    return s;
}

Scalar Scalar::variable(std::size_t slot, std::uint32_t power) {
    Scalar s;
    if (power == 0)
        return one();
    s.add_term(Monomial::var(slot, power), GaussRat(1));
    return s;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussRat Scalar::constant_part() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? GaussRat() : it->second;
}

bool Scalar::uses(std::size_t slot) const {
    for (const auto& [m, c] : terms_)
        if (m.exp(slot) > 0)
            return true;
    return false;
}

std::uint32_t Scalar::max_x_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.x_degree());
    return d;
}

void Scalar::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar Scalar::conj() const {
    Scalar r;
    for (const auto& [m, c] : terms_)
        r.add_term(m, c.conj());
    return r;
}

Scalar Scalar::derivative(std::size_t slot) const {
    Scalar r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(slot);
        if (e == 0)
            continue;
        r.add_term(m.with_exp(slot, e - 1), GaussRat(Rational(e)) * c);
    }
    return r;
}

Scalar Scalar::subst_t(const Rational& value) const {
    Scalar r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(Monomial::slot_t);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        Rational pw(1);
        for (std::uint32_t k = 0; k < e; ++k)
            pw *= value;
        r.add_term(m.with_exp(Monomial::slot_t, 0), GaussRat(pw) * c);
    }
    return r;
}

Scalar Scalar::integrate_t01() const {
    Scalar r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(Monomial::slot_t);
        r.add_term(m.with_exp(Monomial::slot_t, 0),
                   GaussRat(frac(1, e + 1)) * c);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Scalar operator-(const Scalar& a) {
    Scalar r;
    for (const auto& [m, c] : a.terms_)
        r.add_term(m, -c);
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, ca] : a.terms_) {
        const bool a_has_b = ma.exp(Monomial::slot_b) != 0;
        for (const auto& [mb, cb] : b.terms_) {
            if (a_has_b && mb.exp(Monomial::slot_b) != 0)
                continue; // b^2 = 0
            Monomial key = ma.times(mb);
            auto it = r.terms_.lower_bound(key);
            if (it != r.terms_.end() && it->first == key)
                it->second += ca * cb;
            else
                r.terms_.emplace_hint(it, key, ca * cb);
        }
    }
    // Cancellations are swept once at the end instead of per insertion.
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

Scalar operator*(const GaussRat& c, const Scalar& a) {
    Scalar r;
    for (const auto& [m, cc] : a.terms())
        r.add_term(m, c * cc);
    return r;
}

} // namespace kforms
