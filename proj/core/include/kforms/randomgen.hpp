#pragma once

#include <cstdint>
#include <string>

#include "kforms/ktheory.hpp"

namespace kforms {

// Size bounds for randomized instances: base dimension, bundle rank, total
// degree of coefficient monomials, and term count per generated form.
struct Profile {
    std::string name;
    unsigned dim;
    unsigned rank;
    unsigned coeff_degree;
    unsigned terms;

    static Profile small();    // (3, 2, 1, 3)
    static Profile standard(); // (4, 2, 2, 4)
    static Profile large();    // (5, 3, 2, 5)
    static Profile by_name(const std::string& name); // small|default|large
};

// splitmix64: tiny, fast, identical on every platform.
std::uint64_t mix64(std::uint64_t& state);

// Folds strings and indices into a seed so each (suite, check, instance)
// slot draws from an independent deterministic stream.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& a,
                          const std::string& b, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_); }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long int_in(long lo, long hi); // inclusive bounds
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// Draws structured random inputs within a profile's bounds. All draws go
// through the owned Rng, so a (seed, profile) pair fixes every output.
class Sampler {
public:
    Sampler(std::uint64_t seed, const Profile& profile)
        : rng_(seed), profile_(profile) {}

    const Profile& profile() const { return profile_; }
    Rng& rng() { return rng_; }

    Rational rational(bool nonzero = false); // small numerator and denominator
    GaussRat coeff(bool nonzero = true);
    Scalar monomial_coeff();              // one x-monomial with a Gaussian coefficient
    Form term_of_degree(unsigned d);      // single term of the given degree
    Form form_of_parity(bool odd);        // profile.terms terms of that parity, degree >= 1

    Form odd_form();             // nonzero odd base form
    Form even_form();            // even of positive degree, may be zero
    Form unit_even_form();       // 1 + even positive part
    Form closed_odd_form();      // d of a random even form; closed by construction
    Form nonclosed_odd_form();   // odd with ext_d != 0
    Form real_odd_form();        // conjugation-fixed coefficients
    Form special_imaginary_form();
    Form arbitrary_form(bool cylinder); // any degrees, tau/i in coefficients

    FormMatrix one_form_matrix(unsigned rank);
    Connection connection() { return connection_of(profile_.rank); }
    Connection connection_of(unsigned rank);
    FormMatrix bump(unsigned rank); // perturbation for path independence probes

    Gauge gauge() { return gauge_of(profile_.rank); }
    Gauge gauge_of(unsigned rank);           // constant nonzero determinant
    Gauge unipotent_upper(unsigned rank);    // determinant 1, strictly upper part random
    Metric metric() { return metric_of(profile_.rank); }
    Metric metric_of(unsigned rank);

    Triple triple() { return triple_of(profile_.rank); }
    Triple triple_of(unsigned rank);

private:
    Rng rng_;
    Profile profile_;

    Scalar degree0_poly(); // short polynomial in the x variables
};

} // namespace kforms
