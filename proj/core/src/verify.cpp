#include "kforms/verify.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "kforms/render.hpp"

namespace kforms {

namespace {

constexpr unsigned kBig = 200; // cap-laws
constexpr unsigned kMid = 100; // omega-plus, chern-weil, reldeq applications
constexpr unsigned kStd = 50;  // everything else

std::string clip(std::string t) {
    if (t.size() > 320) {
        t.resize(320);
        t += " ...";
    }
    return t;
}

std::string show(const Form& f) { return clip(render_form(f)); }

bool fail2(const std::string& what, const Form& l, const Form& r, std::string& d) {
    d = what + ": lhs = " + show(l) + " ; rhs = " + show(r);
    return false;
}

bool expect_equal(const char* what, const Form& l, const Form& r, std::string& d) {
    return l == r ? true : fail2(what, l, r, d);
}

bool expect_lambda(const char* what, const Form& l, const Form& r, std::string& d) {
    return lambda_equal(l, r) ? true : fail2(std::string(what) + " (mod exact)", l, r, d);
}

bool expect_zero(const char* what, const Form& f, std::string& d) {
    if (f.is_zero())
        return true;
    d = std::string(what) + ": got " + show(f);
    return false;
}

bool expect(bool ok, const char* what, std::string& d) {
    if (!ok)
        d = what;
    return ok;
}

template <class K>
bool expect_class(const char* what, const K& a, const K& b, std::string& d) {
    if (kclass_equal(a, b))
        return true;
    d = std::string(what) + ": lhs = (" + std::to_string(a.rank) + ", " + show(a.alpha) +
        ") ; rhs = (" + std::to_string(b.rank) + ", " + show(b.alpha) + ")";
    return false;
}

using CheckFn = std::function<bool(Sampler&, std::string&)>;

struct Harness {
    std::uint64_t seed;
    Profile profile;
    SuiteResult result;

    Harness(const std::string& suite, std::uint64_t seed_, const Profile& profile_)
        : seed(seed_), profile(profile_) {
        result.name = suite;
    }

    void check(const std::string& name, unsigned instances, const CheckFn& fn) {
        CheckResult cr;
        cr.name = name;
        cr.instances = instances;
        for (unsigned i = 0; i < instances; ++i) {
            Sampler s(derive_seed(seed, result.name, name, i), profile);
            std::string detail;
            bool ok = false;
            try {
                ok = fn(s, detail);
            } catch (const std::exception& e) {
                detail = std::string("exception: ") + e.what();
            }
            if (!ok) {
                cr.passed = false;
                cr.detail = "instance " + std::to_string(i) +
                            (detail.empty() ? "" : ": " + detail);
                break;
            }
        }
        if (!cr.passed)
            result.passed = false;
        result.checks.push_back(std::move(cr));
    }
};

// ---------------------------------------------------------------- cap-laws

void suite_cap_laws(Harness& h) {
    h.check("associative", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form(), c = s.odd_form();
        return expect_equal("(a+b)+c vs a+(b+c)", cap_add(cap_add(a, b), c),
                            cap_add(a, cap_add(b, c)), d);
    });
    h.check("commutator-exact", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form();
        return expect_equal("commutator vs d(b^a)", cap_add(a, b) - cap_add(b, a),
                            ext_d(b * a), d);
    });
    h.check("neutral", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), z = Form::zero(a.dim());
        return expect_equal("a+0", cap_add(a, z), a, d) &&
               expect_equal("0+a", cap_add(z, a), a, d);
    });
    h.check("inverse", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form();
        return expect_zero("a + neg(a)", cap_add(a, cap_neg(a)), d) &&
               expect_zero("neg(a) + a", cap_add(cap_neg(a), a), d);
    });
    h.check("half-roundtrip", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), half = cap_half(a);
        return expect_equal("half+half vs a", cap_add(half, half), a, d);
    });
    h.check("unit-compatibility", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form(), u = Form::unit(a.dim());
        return expect_equal("(1+da)(1+db) vs 1+d(a+b)",
                            (u + ext_d(a)) * (u + ext_d(b)),
                            u + ext_d(cap_add(a, b)), d);
    });
    h.check("inverse-compatibility", kBig, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form(), u = Form::unit(a.dim());
        return expect_equal("(1+da)(1+db)^-1 vs 1+d(a-b)",
                            (u + ext_d(a)) * omega_plus_inverse(u + ext_d(b)),
                            u + ext_d(cap_add(a, cap_neg(b))), d);
    });
}

// --------------------------------------------------------------- omega-plus

void suite_omega_plus(Harness& h) {
    h.check("sqrt-square", kMid, [](Sampler& s, std::string& d) {
        Form sig = s.unit_even_form();
        Form r = sqrt_plus(sig);
        return expect_equal("sqrt^2 vs s", r * r, sig, d);
    });
    h.check("sqrt-roundtrip", kMid, [](Sampler& s, std::string& d) {
        Form u = s.unit_even_form();
        return expect_equal("sqrt(u^2) vs u", sqrt_plus(u * u), u, d);
    });
    h.check("wedge-inverse", kMid, [](Sampler& s, std::string& d) {
        Form sig = s.unit_even_form(), u = Form::unit(sig.dim());
        return expect_equal("s s^-1", sig * omega_plus_inverse(sig), u, d) &&
               expect_equal("s^-1 s", omega_plus_inverse(sig) * sig, u, d);
    });
    h.check("modulus-split", kMid, [](Sampler& s, std::string& d) {
        Form sig = s.unit_even_form(), u = Form::unit(sig.dim());
        auto [rho, theta] = modulus_split(sig);
        return expect_equal("rho real", rho.conj(), rho, d) &&
               expect_equal("theta modulus one", theta * theta.conj(), u, d) &&
               expect_equal("rho theta vs s", rho * theta, sig, d);
    });
    h.check("split-parts", kMid, [](Sampler& s, std::string& d) {
        Form a = s.odd_form();
        auto [beta, gamma] = real_specialimag_split(a);
        return expect(lambda_real(beta), "real part fixed by conjugation mod exact", d) &&
               expect(special_imaginary(gamma), "gamma special imaginary", d);
    });
    h.check("split-recombine", kMid, [](Sampler& s, std::string& d) {
        Form a = s.odd_form();
        auto [beta, gamma] = real_specialimag_split(a);
        return expect_lambda("beta + gamma vs a", cap_add(beta, gamma), a, d);
    });
    h.check("closed-plus-real", kMid, [](Sampler& s, std::string& d) {
        Form a = s.closed_odd_form() + s.real_odd_form();
        Form u = Form::unit(a.dim());
        auto [beta, gamma] = real_specialimag_split(a);
        (void)beta;
        return expect_zero("gamma part closed", ext_d(gamma), d) &&
               expect_equal("1+da real", (u + ext_d(a)).conj(), u + ext_d(a), d);
    });
    h.check("closed-plus-imaginary", kMid, [](Sampler& s, std::string& d) {
        Form a = s.closed_odd_form() + s.special_imaginary_form();
        Form u = Form::unit(a.dim());
        auto [beta, gamma] = real_specialimag_split(a);
        (void)gamma;
        Form w = u + ext_d(a);
        return expect_zero("beta part closed", ext_d(beta), d) &&
               expect_equal("1+da modulus one", w * w.conj(), u, d);
    });
    h.check("exp-homomorphism", kMid, [](Sampler& s, std::string& d) {
        Form u1 = s.even_form(), u2 = s.even_form();
        return expect_equal("exp(u+v) vs exp(u)exp(v)", exp_even(u1 + u2),
                            exp_even(u1) * exp_even(u2), d);
    });
}

// --------------------------------------------------------------- chern-weil

void suite_chern_weil(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    const InvPoly ch = InvPoly::chern_char();
    h.check("total-chern-closed", kMid, [ctot](Sampler& s, std::string& d) {
        Connection a = s.connection();
        return expect_zero("d ctot(F)", ext_d(eval_poly(ctot, curvature(a))), d);
    });
    h.check("character-closed", kMid, [ch](Sampler& s, std::string& d) {
        Connection a = s.connection();
        return expect_zero("d ch(F)", ext_d(eval_poly(ch, curvature(a))), d);
    });
    h.check("gauge-invariance", kMid, [ctot, ch](Sampler& s, std::string& d) {
        Connection a = s.connection();
        Gauge g = s.gauge();
        FormMatrix f0 = curvature(a), f1 = curvature(gauge_transform(g, a));
        const InvPoly c2 = InvPoly::chern_component(2);
        return expect_equal("ctot invariant", eval_poly(ctot, f1), eval_poly(ctot, f0), d) &&
               expect_equal("ch invariant", eval_poly(ch, f1), eval_poly(ch, f0), d) &&
               expect_equal("c2 invariant", eval_poly(c2, f1), eval_poly(c2, f0), d);
    });
    h.check("exp-phi-character", kMid, [ctot, ch](Sampler& s, std::string& d) {
        FormMatrix f = curvature(s.connection());
        return expect_equal("ctot vs exp(phi(ch))", eval_poly(ctot, f),
                            exp_even(phi_map(eval_poly(ch, f))), d);
    });
    h.check("adjoint-involution", kMid, [](Sampler& s, std::string& d) {
        Connection a = s.connection();
        Metric m = s.metric();
        return expect_equal("a** vs a", adjoint(adjoint(a, m), m).matrix().trace(),
                            a.matrix().trace(), d) &&
               expect(adjoint(adjoint(a, m), m).matrix() == a.matrix(),
                      "adjoint involution entrywise", d);
    });
    h.check("adjoint-defining-identity", kMid, [](Sampler& s, std::string& d) {
        Connection a = s.connection();
        Metric m = s.metric();
        FormMatrix lhs = ext_d(m.h());
        FormMatrix rhs = a.matrix().conj_transpose() * m.h() + m.h() * adjoint(a, m).matrix();
        return expect(lhs == rhs, "dh vs conj(A)^T h + h A*", d);
    });
    h.check("conjugation", kMid, [ctot, ch](Sampler& s, std::string& d) {
        Connection a = s.connection();
        Metric m = s.metric();
        FormMatrix f = curvature(a), fstar = curvature(adjoint(a, m));
        return expect_equal("ctot(F*) vs conj ctot(F)", eval_poly(ctot, fstar),
                            eval_poly(ctot, f).conj(), d) &&
               expect_equal("ch(F*) vs conj ch(F)", eval_poly(ch, fstar),
                            eval_poly(ch, f).conj(), d);
    });
    h.check("whitney-sum", kMid, [ctot, ch](Sampler& s, std::string& d) {
        Connection a = s.connection(), b = s.connection();
        FormMatrix fs = curvature(direct_sum(a, b));
        FormMatrix fa = curvature(a), fb = curvature(b);
        return expect_equal("ctot multiplicative", eval_poly(ctot, fs),
                            eval_poly(ctot, fa) * eval_poly(ctot, fb), d) &&
               expect_equal("ch additive", eval_poly(ch, fs),
                            eval_poly(ch, fa) + eval_poly(ch, fb), d);
    });
    h.check("component-sum", kMid, [](Sampler& s, std::string& d) {
        const InvPoly c1 = InvPoly::chern_component(1), c2 = InvPoly::chern_component(2);
        Connection a = s.connection(), b = s.connection();
        FormMatrix fs = curvature(direct_sum(a, b));
        FormMatrix fa = curvature(a), fb = curvature(b);
        Form c1a = eval_poly(c1, fa), c1b = eval_poly(c1, fb);
        return expect_equal("c1 of sum", eval_poly(c1, fs), c1a + c1b, d) &&
               expect_equal("c2 of sum", eval_poly(c2, fs),
                            eval_poly(c2, fa) + c1a * c1b + eval_poly(c2, fb), d);
    });
}

// --------------------------------------------------- transgression-additive

void suite_transgression_additive(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    const InvPoly ch = InvPoly::chern_char();
    h.check("exactness", kStd, [ctot, ch](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Form p0 = eval_poly(ch, curvature(a0)), p1 = eval_poly(ch, curvature(a1));
        Form q0 = eval_poly(ctot, curvature(a0)), q1 = eval_poly(ctot, curvature(a1));
        return expect_equal("d cs(ch) vs ch(F1)-ch(F0)",
                            ext_d(cs_additive(ch, a0, a1)), p1 - p0, d) &&
               expect_equal("d cs(ctot) vs ctot(F1)-ctot(F0)",
                            ext_d(cs_additive(ctot, a0, a1)), q1 - q0, d);
    });
    h.check("path-independence", kStd, [ch](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        ConnectionPath other = perturbed_path(a0, a1, s.bump(a0.rank()));
        return expect_lambda("affine vs perturbed path", cs_additive(ch, a0, a1),
                             cs_additive(ch, a0, a1, other), d);
    });
    h.check("chasles", kStd, [ch](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection(), a2 = s.connection();
        return expect_lambda("cs(0,2) vs cs(0,1)+cs(1,2)", cs_additive(ch, a0, a2),
                             cs_additive(ch, a0, a1) + cs_additive(ch, a1, a2), d);
    });
    h.check("direct-sum", kStd, [ch](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Connection b0 = s.connection(), b1 = s.connection();
        return expect_equal("cs of sum vs sum of cs",
                            cs_additive(ch, direct_sum(a0, b0), direct_sum(a1, b1)),
                            cs_additive(ch, a0, a1) + cs_additive(ch, b0, b1), d);
    });
    h.check("reversal", kStd, [ch](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        return expect_equal("cs(1,0) vs -cs(0,1)", cs_additive(ch, a1, a0),
                            -cs_additive(ch, a0, a1), d);
    });
    h.check("wedge-product", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Form cs = cs_additive(ctot, a0, a1);
        Form w = cs_additive(InvPoly::product(InvPoly::total_chern(),
                                              InvPoly::total_chern()),
                             a0, a1);
        Form p0 = eval_poly(ctot, curvature(a0)), p1 = eval_poly(ctot, curvature(a1));
        return expect_lambda("first transgression of square", w, cs * p0 + p1 * cs, d) &&
               expect_lambda("second transgression of square", w, p0 * cs + cs * p1, d);
    });
    h.check("gauge-exactness", kStd, [ch](Sampler& s, std::string& d) {
        Connection a = s.connection();
        auto [cs, prim] = gauge_exactness_witness(ch, a, s.gauge());
        return expect_equal("d primitive vs cs", ext_d(prim), cs, d);
    });
}

// ----------------------------------------------- transgression-multiplicative

void suite_transgression_multiplicative(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    h.check("unit-exactness", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Form u = Form::unit(a0.dim());
        Form lhs = u + ext_d(cs_multiplicative(ctot, a0, a1));
        Form rhs = eval_poly(ctot, curvature(a1)) *
                   omega_plus_inverse(eval_poly(ctot, curvature(a0)));
        return expect_equal("1+d cs vs ctot(F1) ctot(F0)^-1", lhs, rhs, d);
    });
    h.check("cocycle", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection(), a2 = s.connection();
        return expect_lambda("cs(0,2) vs cs(1,2)+cs(0,1)",
                             cs_multiplicative(ctot, a0, a2),
                             cap_add(cs_multiplicative(ctot, a1, a2),
                                     cs_multiplicative(ctot, a0, a1)),
                             d);
    });
    h.check("exchange", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        return expect_lambda("cs(1,0) vs neg cs(0,1)", cs_multiplicative(ctot, a1, a0),
                             cap_neg(cs_multiplicative(ctot, a0, a1)), d);
    });
    h.check("inverse-polynomial", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        return expect_lambda("cs of inverse vs reversed cs",
                             cs_multiplicative(InvPoly::inverse(InvPoly::total_chern()),
                                               a0, a1),
                             cs_multiplicative(ctot, a1, a0), d);
    });
    h.check("direct-sum", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Connection b0 = s.connection(), b1 = s.connection();
        return expect_lambda("cs of sum vs modified sum of cs",
                             cs_multiplicative(ctot, direct_sum(a0, b0),
                                               direct_sum(a1, b1)),
                             cap_add(cs_multiplicative(ctot, b0, b1),
                                     cs_multiplicative(ctot, a0, a1)),
                             d);
    });
    h.check("conjugation", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        Metric m = s.metric();
        return expect_equal("cs of adjoints vs conj cs",
                            cs_multiplicative(ctot, adjoint(a0, m), adjoint(a1, m)),
                            cs_multiplicative(ctot, a0, a1).conj(), d);
    });
    h.check("path-independence", kStd, [ctot](Sampler& s, std::string& d) {
        Connection a0 = s.connection(), a1 = s.connection();
        ConnectionPath other = perturbed_path(a0, a1, s.bump(a0.rank()));
        return expect_lambda("affine vs perturbed path",
                             cs_multiplicative(ctot, a0, a1),
                             cs_multiplicative(ctot, a0, a1, other), d);
    });
}

// ---------------------------------------------------------------- maitresse

void suite_maitresse(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    const InvPoly ch = InvPoly::chern_char();
    const unsigned rank = std::min(2u, h.profile.rank);
    h.check("main-theorem", kStd, [ctot, ch, rank](Sampler& s, std::string& d) {
        Connection a0 = s.connection_of(rank), a1 = s.connection_of(rank);
        return expect_lambda("cs_mult(ctot) vs psi_F(cs_add(ch))",
                             cs_multiplicative(ctot, a0, a1),
                             psi_F(cs_additive(ch, a0, a1)), d);
    });
    h.check("psi-inverse", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form();
        return expect_equal("psi_G(psi_F(a)) vs a", psi_G(psi_F(a)), a, d) &&
               expect_equal("psi_F(psi_G(b)) vs b", psi_F(psi_G(b)), b, d);
    });
    h.check("exp-coordinates-additivity", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form();
        return expect_lambda("exp(a+b) vs exp(a) cap exp(b)", exp_coords(a + b),
                             cap_add(exp_coords(a), exp_coords(b)), d);
    });
    h.check("log-coordinates-additivity", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form();
        return expect_lambda("log(a)+log(b) vs log(a cap b)",
                             log_coords(a) + log_coords(b),
                             log_coords(cap_add(a, b)), d);
    });
    h.check("psi-morphism", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form(), b = s.odd_form();
        return expect_lambda("psi_F(a+b) vs psi_F(a) cap psi_F(b)", psi_F(a + b),
                             cap_add(psi_F(a), psi_F(b)), d);
    });
    h.check("coordinates-roundtrip", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form();
        return expect_equal("log(exp(a)) vs a", log_coords(exp_coords(a)), a, d) &&
               expect_equal("exp(log(a)) vs a", exp_coords(log_coords(a)), a, d);
    });
}

// ------------------------------------------------------------- ktheory-mult

void suite_ktheory_mult(Harness& h) {
    h.check("isomorphism-invariance", kMid, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_class("normal form before vs after substitution",
                            normalize_mult({{1, t}}),
                            normalize_mult({{1, reldeq_mult(t, target, f)}}), d);
    });
    h.check("sum-normalize", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple();
        return expect_class("term list vs combined triple",
                            normalize_mult({{1, a}, {1, b}}),
                            normalize_mult({{1, relsum_mult(a, b)}}), d);
    });
    h.check("substitution-sum-compat", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple();
        Connection ta = s.connection(), tb = s.connection();
        Gauge fa = s.gauge(), fb = s.gauge();
        Triple lhs = relsum_mult(reldeq_mult(a, ta, fa), reldeq_mult(b, tb, fb));
        Triple rhs = reldeq_mult(relsum_mult(a, b), direct_sum(ta, tb),
                                 direct_sum(fa, fb));
        return expect_class("sum of substitutions vs substitution of sum",
                            normalize_mult({{1, lhs}}), normalize_mult({{1, rhs}}), d);
    });
    h.check("iota-realization", kStd, [](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t1 = s.triple(), t2 = s.triple();
        KClassMult r1 = normalize_mult(
            {{1, Triple(t1.conn, cap_add(g, t1.alpha))}, {-1, t1}});
        KClassMult r2 = normalize_mult(
            {{1, Triple(t2.conn, cap_add(g, t2.alpha))}, {-1, t2}});
        return expect_class("difference realizes iota", r1, iota(g), d) &&
               expect_class("independent of the carrier triple", r1, r2, d);
    });
    h.check("iota-injectivity", kStd, [](Sampler& s, std::string& d) {
        Form g = s.nonclosed_odd_form();
        Triple t = s.triple();
        KClassMult r =
            normalize_mult({{1, Triple(t.conn, cap_add(g, t.alpha))}, {-1, t}});
        KClassMult zero{0, Form::zero(t.dim())};
        return expect(!kclass_equal(r, zero), "nonclosed form gives nonzero class", d);
    });
    h.check("invariant-total-chern", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple(), b = s.triple();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_equal("invariant under substitution", star_ctot(t),
                            star_ctot(reldeq_mult(t, target, f)), d) &&
               expect_equal("multiplicative on sums", star_ctot(relsum_mult(t, b)),
                            star_ctot(t) * star_ctot(b), d);
    });
    h.check("invariant-on-iota", kStd, [](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t = s.triple();
        Triple shifted(t.conn, cap_add(g, t.alpha));
        Form u = Form::unit(t.dim());
        return expect_equal("value on -iota(g) vs 1+dg",
                            star_ctot(t) * omega_plus_inverse(star_ctot(shifted)),
                            u + ext_d(g), d);
    });
    h.check("group-laws", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple(), c = s.triple();
        KClassMult n1 = normalize_mult({{1, a}, {-1, b}});
        KClassMult n2 = normalize_mult({{1, c}});
        KClassMult joined = normalize_mult({{1, a}, {-1, b}, {1, c}});
        return expect(joined.rank == n1.rank + n2.rank, "rank adds", d) &&
               expect_equal("concatenated fold vs combined normal forms", joined.alpha,
                            cap_add(n1.alpha, n2.alpha), d);
    });
}

// -------------------------------------------------------------- ktheory-add

void suite_ktheory_add(Harness& h) {
    h.check("isomorphism-invariance", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_class("normal form before vs after substitution",
                            normalize_add({{1, t}}),
                            normalize_add({{1, reldeq_add(t, target, f)}}), d);
    });
    h.check("sum-normalize", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple();
        return expect_class("term list vs combined triple",
                            normalize_add({{1, a}, {1, b}}),
                            normalize_add({{1, relsum_add(a, b)}}), d);
    });
    h.check("a-map-realization", kStd, [](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t1 = s.triple(), t2 = s.triple();
        KClassAdd r1 = normalize_add({{1, Triple(t1.conn, t1.alpha + g)}, {-1, t1}});
        KClassAdd r2 = normalize_add({{1, Triple(t2.conn, t2.alpha + g)}, {-1, t2}});
        return expect_class("difference realizes a", r1, a_additive(g), d) &&
               expect_class("independent of the carrier triple", r1, r2, d);
    });
    h.check("a-map-injectivity", kStd, [](Sampler& s, std::string& d) {
        Form g = s.nonclosed_odd_form();
        Triple t = s.triple();
        KClassAdd r = normalize_add({{1, Triple(t.conn, t.alpha + g)}, {-1, t}});
        KClassAdd zero{0, Form::zero(t.dim())};
        return expect(!kclass_equal(r, zero), "nonclosed form gives nonzero class", d);
    });
    h.check("invariant-character", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple(), b = s.triple();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_equal("invariant under substitution", ch_class(t),
                            ch_class(reldeq_add(t, target, f)), d) &&
               expect_equal("additive on sums", ch_class(relsum_add(t, b)),
                            ch_class(t) + ch_class(b), d);
    });
    h.check("group-laws", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple(), c = s.triple();
        KClassAdd n1 = normalize_add({{1, a}, {-1, b}});
        KClassAdd n2 = normalize_add({{1, c}});
        KClassAdd joined = normalize_add({{1, a}, {-1, b}, {1, c}});
        return expect(joined.rank == n1.rank + n2.rank, "rank adds", d) &&
               expect_equal("concatenated fold vs summed normal forms", joined.alpha,
                            n1.alpha + n2.alpha, d);
    });
}

// ----------------------------------------------------------------- virginia

void suite_virginia(Harness& h) {
    h.check("iota-square", kStd, [](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t = s.triple();
        Triple shifted(t.conn, t.alpha + g);
        KClassMult lhs =
            normalize_mult({{1, psiF_class(shifted)}, {-1, psiF_class(t)}});
        return expect_class("psi of a(g) vs iota(psi_F(g))", lhs, iota(psi_F(g)), d);
    });
    h.check("character-square", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        return expect_equal("star ctot of image vs exp(phi(ch_class))",
                            star_ctot(psiF_class(t)),
                            exp_even(phi_map(ch_class(t))), d);
    });
    h.check("obstruction-square", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m = s.metric();
        return expect_lambda("psi_F of additive obstruction vs multiplicative one",
                             psi_F(borel_additive(t, m)),
                             borel_star(psiF_class(t), m), d);
    });
    h.check("flat-square", kStd, [](Sampler& s, std::string& d) {
        Gauge g = s.gauge();
        Triple ft = flat_embed(g);
        Form u = Form::unit(ft.dim());
        return expect(curvature(ft.conn).is_zero(), "flat curvature", d) &&
               expect_equal("unit invariant", star_ctot(ft), u, d) &&
               expect_equal("psi fixes flat classes", psiF_class(ft).alpha, ft.alpha, d);
    });
    h.check("psi-class-roundtrip", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Triple back = psiG_class(psiF_class(t));
        return expect_equal("alpha restored", back.alpha, t.alpha, d) &&
               expect(back.conn == t.conn, "connection untouched", d);
    });
}

// -------------------------------------------------------------------- borel

void suite_borel(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    h.check("special-imaginary", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        return expect(special_imaginary(borel_star(t, s.metric())),
                      "class plus its conjugate vanishes mod exact", d);
    });
    h.check("additive-imaginary", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Form b = borel_additive(t, s.metric());
        return expect_lambda("b + conj(b) vs 0", b + b.conj(), Form::zero(t.dim()), d);
    });
    h.check("metric-independence", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m1 = s.metric(), m2 = s.metric();
        return expect_lambda("multiplicative flavor", borel_star(t, m1),
                             borel_star(t, m2), d) &&
               expect_lambda("additive flavor", borel_additive(t, m1),
                             borel_additive(t, m2), d);
    });
    h.check("class-invariance", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m = s.metric();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_lambda("invariant under substitution", borel_star(t, m),
                             borel_star(reldeq_mult(t, target, f), m), d);
    });
    h.check("morphism", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple();
        Metric ma = s.metric(), mb = s.metric();
        return expect_lambda("multiplicative flavor",
                             borel_star(relsum_mult(a, b), direct_sum(ma, mb)),
                             cap_add(borel_star(a, ma), borel_star(b, mb)), d) &&
               expect_lambda("additive flavor",
                             borel_additive(relsum_add(a, b), direct_sum(ma, mb)),
                             borel_additive(a, ma) + borel_additive(b, mb), d);
    });
    h.check("vanishing-unitary-real", kStd, [](Sampler& s, std::string& d) {
        Metric m = s.metric();
        Connection u = unitarize(s.connection(), m);
        Triple t(u, s.real_odd_form());
        return expect_zero("metric connection and real form", borel_star(t, m), d);
    });
    h.check("conjugate-difference", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m = s.metric();
        KClassMult diff = normalize_mult({{1, t}, {-1, conj_class(t, m)}});
        return expect_class("t - conj(t) vs iota(neg borel)", diff,
                            iota(cap_neg(borel_star(t, m))), d);
    });
    h.check("conjugate-involution", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m = s.metric();
        Triple cc = conj_class(conj_class(t, m), m);
        return expect(cc.conn == t.conn, "connection restored", d) &&
               expect_equal("alpha restored", cc.alpha, t.alpha, d);
    });
    h.check("triangular-flat", kStd, [ctot](Sampler& s, std::string& d) {
        unsigned rank = s.profile().rank, dim = s.profile().dim;
        Gauge g = s.unipotent_upper(rank);
        Connection a = gauge_transform(g, Connection::zero(rank, dim));
        return expect_zero("transgression from zero to strictly triangular",
                           cs_multiplicative(ctot, Connection::zero(rank, dim), a), d);
    });
}

// ---------------------------------------------------------- angelique-model

void suite_angelique(Harness& h) {
    h.check("boundary-compatibility", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Form u = Form::unit(t.dim());
        return expect_equal("1+d(cup) vs star ctot",
                            u + ext_d(cup_ctot_model(t).alpha), star_ctot(t), d);
    });
    h.check("sum-morphism", kStd, [](Sampler& s, std::string& d) {
        Triple a = s.triple(), b = s.triple();
        return expect_lambda("cup of sum vs model product",
                             cup_ctot_model(relsum_mult(a, b)).alpha,
                             char_mult(cup_ctot_model(a), cup_ctot_model(b)).alpha, d);
    });
    h.check("substitution-invariance", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Connection target = s.connection();
        Gauge f = s.gauge();
        return expect_lambda("cup before vs after substitution",
                             cup_ctot_model(t).alpha,
                             cup_ctot_model(reldeq_mult(t, target, f)).alpha, d);
    });
    h.check("iota-compatibility", kStd, [](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t = s.triple();
        Triple shifted(t.conn, cap_add(g, t.alpha));
        return expect_lambda("cup on iota(g) vs neg g",
                             cap_add(cup_ctot_model(shifted).alpha,
                                     cap_neg(cup_ctot_model(t).alpha)),
                             cap_neg(g), d);
    });
    h.check("conjugation", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Metric m = s.metric();
        return expect_lambda("cup of conjugate class vs conjugate cup",
                             cup_ctot_model(conj_class(t, m)).alpha,
                             char_conj(cup_ctot_model(t)).alpha, d);
    });
    h.check("imaginary-component", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Form cup = cup_ctot_model(t).alpha;
        Form half = cap_half(borel_star(t, Metric::identity(t.rank(), t.dim())));
        return expect_lambda("special imaginary part vs half obstruction",
                             real_specialimag_split(cup).second, half, d);
    });
    h.check("split-uniqueness", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        Form v = cup_ctot_model(t).alpha;
        auto [beta, gamma] = real_specialimag_split(v);
        auto [beta2, gamma2] = real_specialimag_split(cap_add(beta, gamma));
        return expect(lambda_real(beta), "real part", d) &&
               expect(special_imaginary(gamma), "imaginary part", d) &&
               expect_lambda("recombination", cap_add(beta, gamma), v, d) &&
               expect_lambda("real part stable", beta2, beta, d) &&
               expect_lambda("imaginary part stable", gamma2, gamma, d);
    });
    h.check("unit-class", kStd, [](Sampler& s, std::string& d) {
        unsigned rank = s.profile().rank, dim = s.profile().dim;
        Triple unit_triple(Connection::zero(rank, dim), Form::zero(dim));
        return expect_zero("cup of the unit class", cup_ctot_model(unit_triple).alpha, d);
    });
}

// -------------------------------------------------------------- karen-model

void suite_karen(Harness& h) {
    h.check("character-diagram", kStd, [](Sampler& s, std::string& d) {
        Triple t = s.triple();
        return expect_lambda("ln of cup vs character of preimage",
                             phi_inv(model_ln(cup_ctot_model(t))),
                             ch_character_model(psiG_class(t)), d);
    });
    h.check("ln-homomorphism", kStd, [](Sampler& s, std::string& d) {
        CharModelElem e1{s.odd_form()}, e2{s.odd_form()};
        return expect_lambda("ln of product vs sum of ln",
                             model_ln(char_mult(e1, e2)),
                             model_ln(e1) + model_ln(e2), d);
    });
    h.check("ln-exp-roundtrip", kStd, [](Sampler& s, std::string& d) {
        Form a = s.odd_form();
        return expect_equal("ln(exp(a)) vs a", model_ln(CharModelElem{exp_coords(a)}),
                            a, d);
    });
}

// ------------------------------------------------------------------- legacy

void suite_legacy(Harness& h) {
    const InvPoly ctot = InvPoly::total_chern();
    h.check("chern-correction", kStd, [ctot](Sampler& s, std::string& d) {
        Triple t = s.triple();
        LegacyTriple lt = legacy_convert(t);
        return expect_equal("ctot - d beta vs star ctot",
                            eval_poly(ctot, curvature(t.conn)) - ext_d(lt.beta),
                            star_ctot(t), d);
    });
    h.check("iota-compatibility", kStd, [ctot](Sampler& s, std::string& d) {
        Form g = s.odd_form();
        Triple t = s.triple();
        Form c = eval_poly(ctot, curvature(t.conn));
        Form u = Form::unit(t.dim());
        Form lhs = legacy_convert(Triple(t.conn, cap_add(g, t.alpha))).beta;
        Form rhs = (legacy_convert(t).beta + g * c) *
                   omega_plus_inverse(u + ext_d(g));
        return expect_equal("shifted slot vs transported slot", lhs, rhs, d);
    });
    h.check("sum-transport", kStd, [ctot](Sampler& s, std::string& d) {
        Triple te = s.triple(), tg = s.triple();
        Form ce = eval_poly(ctot, curvature(te.conn));
        Form cg = eval_poly(ctot, curvature(tg.conn));
        Form be = legacy_convert(te).beta, bg = legacy_convert(tg).beta;
        return expect_equal("slot of sum vs transported slots",
                            legacy_convert(relsum_mult(te, tg)).beta,
                            be * cg + bg * ce - bg * ext_d(be), d);
    });
    h.check("zero-decoration", kStd, [](Sampler& s, std::string& d) {
        Triple t(s.connection(), Form::zero(s.profile().dim));
        return expect_zero("slot of an undecorated triple", legacy_convert(t).beta, d);
    });
}

// ------------------------------------------------------------------ registry

struct SuiteEntry {
    const char* name;
    void (*run)(Harness&);
};

const SuiteEntry kSuites[] = {
    {"cap-laws", suite_cap_laws},
    {"omega-plus", suite_omega_plus},
    {"chern-weil", suite_chern_weil},
    {"transgression-additive", suite_transgression_additive},
    {"transgression-multiplicative", suite_transgression_multiplicative},
    {"maitresse", suite_maitresse},
    {"ktheory-mult", suite_ktheory_mult},
    {"ktheory-add", suite_ktheory_add},
    {"virginia", suite_virginia},
    {"borel", suite_borel},
    {"angelique-model", suite_angelique},
    {"karen-model", suite_karen},
    {"legacy", suite_legacy},
};

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const SuiteEntry& e : kSuites)
            v.push_back(e.name);
        return v;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed,
                        const Profile& profile) {
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    report.profile = profile.name;
    bool found = false;
    for (const SuiteEntry& e : kSuites) {
        if (suite != "all" && suite != e.name)
            continue;
        found = true;
        Harness h(e.name, seed, profile);
        e.run(h);
        if (!h.result.passed)
            report.passed = false;
        report.suites.push_back(std::move(h.result));
    }
    if (!found && suite != "all")
        throw UsageError("unknown suite \"" + suite + "\"");
    return report;
}

std::string report_text(const VerifyReport& r) {
    std::ostringstream out;
    out << "verify suite=" << r.suite << " seed=" << r.seed
        << " profile=" << r.profile << "\n";
    unsigned checks = 0;
    for (const SuiteResult& s : r.suites)
        for (const CheckResult& c : s.checks) {
            ++checks;
            out << (c.passed ? "[PASS] " : "[FAIL] ") << s.name << "/" << c.name
                << " (" << c.instances << " instances)";
            if (!c.passed)
                out << ": " << c.detail;
            out << "\n";
        }
    out << "result: " << (r.passed ? "PASS" : "FAIL") << " (" << r.suites.size()
        << " suites, " << checks << " checks)\n";
    return out.str();
}

std::string report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["profile"] = r.profile;
    j["passed"] = r.passed;
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : r.suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["passed"] = s.passed;
        js["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& c : s.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["instances"] = c.instances;
            jc["passed"] = c.passed;
            if (!c.passed)
                jc["detail"] = c.detail;
            js["checks"].push_back(std::move(jc));
        }
        j["suites"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

} // namespace kforms
