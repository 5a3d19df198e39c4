#include "kforms/ktheory.hpp"

namespace kforms {

namespace {

const InvPoly kCtot = InvPoly::total_chern();
const InvPoly kCh = InvPoly::chern_char();

void require_fit(const Triple& t, unsigned rank, unsigned dim, const char* what) {
    if (t.rank() != rank || t.dim() != dim)
        throw DimensionMismatch(std::string(what) + ": shapes do not fit");
}

} // namespace

Triple::Triple(Connection c, Form a) : conn(std::move(c)), alpha(std::move(a)) {
    if (alpha.dim() != conn.dim())
        throw DimensionMismatch("triple: form dimension does not match connection");
    if (alpha.cylinder() || !alpha.is_odd())
        throw DimensionMismatch("triple: decoration must be an odd base form");
}

KClassMult normalize_mult(const std::vector<SignedTriple>& ts) {
    if (ts.empty())
        throw UsageError("normalize needs at least one triple");
    unsigned dim = ts.front().t.dim();
    int vrank = 0;
    Form acc = Form::zero(dim);
    for (const auto& [sign, t] : ts) {
        if (sign != 1 && sign != -1)
            throw UsageError("triple signs must be +1 or -1");
        if (t.dim() != dim)
            throw DimensionMismatch("normalize: mixed base dimensions");
        Form nf = cap_add(
            cs_multiplicative(kCtot, t.conn, Connection::zero(t.rank(), dim)),
            t.alpha);
        vrank += sign * int(t.rank());
        acc = cap_add(acc, sign > 0 ? nf : cap_neg(nf));
    }
    return {vrank, acc};
}

KClassAdd normalize_add(const std::vector<SignedTriple>& ts) {
    if (ts.empty())
        throw UsageError("normalize needs at least one triple");
    unsigned dim = ts.front().t.dim();
    Form acc = Form::zero(dim);
    int vrank = 0;
    for (const auto& [sign, t] : ts) {
        if (sign != 1 && sign != -1)
            throw UsageError("triple signs must be +1 or -1");
        if (t.dim() != dim)
            throw DimensionMismatch("normalize: mixed base dimensions");
        Form nf = cs_additive(kCh, t.conn, Connection::zero(t.rank(), dim)) + t.alpha;
        vrank += sign * int(t.rank());
        acc += sign > 0 ? nf : -nf;
    }
    return {vrank, acc};
}

bool kclass_equal(const KClassMult& a, const KClassMult& b) {
    return a.rank == b.rank && lambda_equal(a.alpha, b.alpha);
}

bool kclass_equal(const KClassAdd& a, const KClassAdd& b) {
    return a.rank == b.rank && lambda_equal(a.alpha, b.alpha);
}

KClassMult iota(const Form& gamma) {
    if (gamma.cylinder() || !gamma.is_odd())
        throw DimensionMismatch("iota needs an odd base form");
    return {0, gamma};
}

KClassAdd a_additive(const Form& gamma) {
    if (gamma.cylinder() || !gamma.is_odd())
        throw DimensionMismatch("a_additive needs an odd base form");
    return {0, gamma};
}

Triple relsum_mult(const Triple& a, const Triple& b) {
    return Triple(direct_sum(a.conn, b.conn), cap_add(a.alpha, b.alpha));
}

Triple relsum_add(const Triple& a, const Triple& b) {
    return Triple(direct_sum(a.conn, b.conn), a.alpha + b.alpha);
}

Triple reldeq_mult(const Triple& t, const Connection& target, const Gauge& f) {
    require_fit(t, target.rank(), target.dim(), "reldeq");
    Connection pulled = gauge_transform(f, target);
    return Triple(target,
                  cap_add(cs_multiplicative(kCtot, t.conn, pulled), t.alpha));
}

Triple reldeq_add(const Triple& t, const Connection& target, const Gauge& f) {
    require_fit(t, target.rank(), target.dim(), "reldeq");
    Connection pulled = gauge_transform(f, target);
    return Triple(target, cs_additive(kCh, t.conn, pulled) + t.alpha);
}

Form star_ctot(const Triple& t) {
    Form u = Form::unit(t.dim()) + ext_d(t.alpha);
    return eval_poly(kCtot, curvature(t.conn)) * omega_plus_inverse(u);
}

Form ch_class(const Triple& t) {
    return eval_poly(kCh, curvature(t.conn)) - ext_d(t.alpha);
}

Form borel_star(const Triple& t, const Metric& m) {
    Connection star = adjoint(t.conn, m);
    Form cs = cs_multiplicative(kCtot, star, t.conn);
    return cap_add(cap_add(cs, cap_neg(t.alpha)), t.alpha.conj());
}

Form borel_additive(const Triple& t, const Metric& m) {
    Connection star = adjoint(t.conn, m);
    return cs_additive(kCh, star, t.conn) - t.alpha + t.alpha.conj();
}

Triple conj_class(const Triple& t, const Metric& m) {
    return Triple(adjoint(t.conn, m), t.alpha.conj());
}

Triple psiF_class(const Triple& t) { return Triple(t.conn, psi_F(t.alpha)); }

Triple psiG_class(const Triple& t) { return Triple(t.conn, psi_G(t.alpha)); }

Triple flat_embed(const Gauge& g) {
    Connection zero = Connection::zero(g.rank(), g.dim());
    return Triple(gauge_transform(g, zero), Form::zero(g.dim()));
}

LegacyTriple legacy_convert(const Triple& t) {
    Form c = eval_poly(kCtot, curvature(t.conn));
    return {t.conn, -(c * cap_neg(t.alpha))};
}

CharModelElem char_mult(const CharModelElem& a, const CharModelElem& b) {
    return {cap_add(a.alpha, b.alpha)};
}

CharModelElem char_conj(const CharModelElem& a) { return {a.alpha.conj()}; }

CharModelElem cup_ctot_model(const Triple& t) {
    Form cs = cs_multiplicative(kCtot, Connection::zero(t.rank(), t.dim()), t.conn);
    return {cap_add(cs, cap_neg(t.alpha))};
}

Form model_ln(const CharModelElem& a) { return log_coords(a.alpha); }

Form ch_character_model(const Triple& t) {
    return cs_additive(kCh, Connection::zero(t.rank(), t.dim()), t.conn) - t.alpha;
}

} // namespace kforms
