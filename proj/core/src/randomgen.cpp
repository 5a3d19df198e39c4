#include "kforms/randomgen.hpp"

#include <vector>

namespace kforms {

Profile Profile::small() { return {"small", 3, 2, 1, 3}; }
Profile Profile::standard() { return {"default", 4, 2, 2, 4}; }
Profile Profile::large() { return {"large", 5, 3, 2, 5}; }

Profile Profile::by_name(const std::string& name) {
    if (name == "small")
        return small();
    if (name == "default")
        return standard();
    if (name == "large")
        return large();
    throw UsageError("unknown profile \"" + name + "\" (small, default, large)");
}

std::uint64_t mix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}
} // namespace

std::uint64_t derive_seed(std::uint64_t seed, const std::string& a,
                          const std::string& b, std::uint64_t index) {
    std::uint64_t s = seed;
    s ^= mix64(s) ^ fnv1a(a);
    s ^= mix64(s) ^ fnv1a(b);
    s ^= mix64(s) ^ index;
    mix64(s);
    return s;
}

long Rng::int_in(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo + 1)));
}

Rational Sampler::rational(bool nonzero) {
    long num = rng_.int_in(nonzero ? 1 : 0, 3);
    if (rng_.chance(1, 2))
        num = -num;
    long den = rng_.int_in(1, 3);
    return frac(num, den);
}

GaussRat Sampler::coeff(bool nonzero) {
    for (;;) {
        GaussRat c(rational(false), rng_.chance(1, 2) ? rational(false) : Rational(0));
        if (!nonzero || !c.is_zero())
            return c;
    }
}

Scalar Sampler::monomial_coeff() {
    Monomial m;
    unsigned total = unsigned(rng_.int_in(0, long(profile_.coeff_degree)));
    for (unsigned u = 0; u < total; ++u) {
        unsigned var = unsigned(rng_.int_in(1, long(profile_.dim)));
        m = m.times(Monomial::var(Monomial::slot_x(var)));
    }
    Scalar s;
    s.add_term(m, coeff(true));
    return s;
}

Scalar Sampler::degree0_poly() {
    Scalar s;
    unsigned n = unsigned(rng_.int_in(0, 2));
    for (unsigned k = 0; k < n; ++k)
        s = s + monomial_coeff();
    return s;
}

Form Sampler::term_of_degree(unsigned d) {
    Form f(profile_.dim);
    if (d > profile_.dim)
        return f;
    Form::Mask mask = 0;
    while (std::uint32_t(std::popcount(mask)) < d)
        mask |= Form::dx_bit(unsigned(rng_.int_in(1, long(profile_.dim))));
    f.add_term(mask, monomial_coeff());
    return f;
}

Form Sampler::form_of_parity(bool odd) {
    std::vector<unsigned> degrees;
    for (unsigned d = odd ? 1 : 2; d <= profile_.dim; d += 2)
        degrees.push_back(d);
    Form f(profile_.dim);
    if (degrees.empty())
        return f;
    for (unsigned k = 0; k < profile_.terms; ++k)
        f += term_of_degree(degrees[rng_.below(degrees.size())]);
    return f;
}

Form Sampler::odd_form() {
    for (int tries = 0; tries < 32; ++tries) {
        Form f = form_of_parity(true);
        if (!f.is_zero())
            return f;
    }
    Form f(profile_.dim);
    f.add_term(Form::dx_bit(1), Scalar::x(std::min(2u, profile_.dim)));
    return f;
}

Form Sampler::even_form() { return form_of_parity(false); }

Form Sampler::unit_even_form() { return Form::unit(profile_.dim) + even_form(); }

Form Sampler::closed_odd_form() {
    Form base = even_form();
    if (rng_.chance(1, 2)) {
        Form f(profile_.dim);
        f.add_term(0, monomial_coeff());
        base += f;
    }
    return ext_d(base);
}

Form Sampler::nonclosed_odd_form() {
    for (int tries = 0; tries < 64; ++tries) {
        Form f = odd_form();
        if (!ext_d(f).is_zero())
            return f;
    }
    Form f(profile_.dim);
    f.add_term(Form::dx_bit(1), Scalar::x(std::min(2u, profile_.dim)));
    return f;
}

Form Sampler::real_odd_form() {
    Form f = form_of_parity(true);
    return Scalar::rational(frac(1, 2)) * (f + f.conj());
}

Form Sampler::special_imaginary_form() {
    Form a = odd_form();
    return cap_half(cap_add(a, cap_neg(a.conj())));
}

Form Sampler::arbitrary_form(bool cylinder) {
    Form f(profile_.dim, cylinder);
    for (unsigned k = 0; k < profile_.terms; ++k) {
        Form::Mask mask = 0;
        unsigned d = unsigned(rng_.int_in(0, long(profile_.dim)));
        while (std::uint32_t(std::popcount(mask)) < d)
            mask |= Form::dx_bit(unsigned(rng_.int_in(1, long(profile_.dim))));
        if (cylinder && rng_.chance(1, 3))
            mask |= Form::dt_bit;
        Monomial m;
        unsigned total = unsigned(rng_.int_in(0, long(profile_.coeff_degree)));
        for (unsigned u = 0; u < total; ++u) {
            switch (rng_.below(cylinder ? 3 : 2)) {
            case 0: m = m.times(Monomial::var(Monomial::slot_x(
                        unsigned(rng_.int_in(1, long(profile_.dim)))))); break;
            case 1: m = m.times(Monomial::var(Monomial::slot_tau)); break;
            default: m = m.times(Monomial::var(Monomial::slot_t)); break;
            }
        }
        Scalar s;
        s.add_term(m, coeff(true));
        f.add_term(mask, s);
    }
    return f;
}

FormMatrix Sampler::one_form_matrix(unsigned rank) {
    FormMatrix m(rank, rank, profile_.dim);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = 0; c < rank; ++c) {
            Form f(profile_.dim);
            unsigned n = unsigned(rng_.int_in(0, 2));
            for (unsigned k = 0; k < n; ++k)
                f += term_of_degree(1);
            m.at(r, c) = f;
        }
    return m;
}

Connection Sampler::connection_of(unsigned rank) {
    return Connection(one_form_matrix(rank));
}

FormMatrix Sampler::bump(unsigned rank) { return one_form_matrix(rank); }

Gauge Sampler::gauge_of(unsigned rank) {
    unsigned dim = profile_.dim;
    FormMatrix upper = FormMatrix::identity(rank, dim);
    FormMatrix lower = FormMatrix::identity(rank, dim);
    FormMatrix diag(rank, rank, dim);
    for (unsigned r = 0; r < rank; ++r) {
        diag.at(r, r) = Form::scalar(dim, Scalar::rational(rational(true)));
        for (unsigned c = r + 1; c < rank; ++c) {
            upper.at(r, c) = Form::scalar(dim, degree0_poly());
            lower.at(c, r) = Form::scalar(dim, degree0_poly());
        }
    }
    return Gauge(upper * diag * lower);
}

Gauge Sampler::unipotent_upper(unsigned rank) {
    unsigned dim = profile_.dim;
    FormMatrix g = FormMatrix::identity(rank, dim);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = r + 1; c < rank; ++c)
            g.at(r, c) = Form::scalar(dim, degree0_poly());
    return Gauge(g);
}

Metric Sampler::metric_of(unsigned rank) {
    return Metric(gauge_of(rank).matrix());
}

Triple Sampler::triple_of(unsigned rank) {
    return Triple(connection_of(rank), odd_form());
}

} // namespace kforms
