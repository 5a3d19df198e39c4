#pragma once

#include <vector>

#include "kforms/cap.hpp"
#include "kforms/transgression.hpp"

namespace kforms {

// Generator of the relative K-group on the patch: trivial bundle with a
// connection, decorated by an odd form.
struct Triple {
    Connection conn;
    Form alpha;

    Triple(Connection c, Form a);
    unsigned rank() const { return conn.rank(); }
    unsigned dim() const { return conn.dim(); }
};

struct SignedTriple {
    int sign; // +1 or -1
    Triple t;
};

// Normal form of a class: virtual rank together with the odd form collected
// at the zero connection. Classes agree iff ranks agree and the forms agree
// up to exact forms.
struct KClassMult {
    int rank;
    Form alpha;
};
struct KClassAdd {
    int rank;
    Form alpha;
};

KClassMult normalize_mult(const std::vector<SignedTriple>& ts);
KClassAdd normalize_add(const std::vector<SignedTriple>& ts);
bool kclass_equal(const KClassMult& a, const KClassMult& b);
bool kclass_equal(const KClassAdd& a, const KClassAdd& b);

KClassMult iota(const Form& gamma); // rank 0, the form itself
KClassAdd a_additive(const Form& gamma);

// Triple-level relations.
Triple relsum_mult(const Triple& a, const Triple& b);
Triple relsum_add(const Triple& a, const Triple& b);
Triple reldeq_mult(const Triple& t, const Connection& target, const Gauge& f);
Triple reldeq_add(const Triple& t, const Connection& target, const Gauge& f);

// Characteristic forms of a class; both invariant under the relations.
Form star_ctot(const Triple& t); // ctot(F) ^ (1 + d alpha)^{-1}
Form ch_class(const Triple& t);  // ch(F) - d alpha

// Obstructions to flatness-with-metric: special imaginary respectively
// purely imaginary up to exact forms, independent of the metric there.
Form borel_star(const Triple& t, const Metric& m);
Form borel_additive(const Triple& t, const Metric& m);

Triple conj_class(const Triple& t, const Metric& m);
Triple psiF_class(const Triple& t);
Triple psiG_class(const Triple& t);
Triple flat_embed(const Gauge& g); // (g^{-1} dg, 0)

// Coordinates in which the equivalence relation multiplies by the total
// Chern form instead of shifting.
struct LegacyTriple {
    Connection conn;
    Form beta;
};
LegacyTriple legacy_convert(const Triple& t);

// Model of even differential characters on the patch: 1 + i2(alpha) with the
// modified sum as multiplication.
struct CharModelElem {
    Form alpha;
};
CharModelElem char_mult(const CharModelElem& a, const CharModelElem& b);
CharModelElem char_conj(const CharModelElem& a);
CharModelElem cup_ctot_model(const Triple& t);
Form model_ln(const CharModelElem& a); // alpha ^ G(d alpha)

// Patch value of the rationalized additive character minus rank: the odd
// form transgressing from the zero connection, minus the decoration.
Form ch_character_model(const Triple& t);

} // namespace kforms
