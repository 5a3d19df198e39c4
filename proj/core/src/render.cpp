#include "kforms/render.hpp"

#include <sstream>

namespace kforms {

namespace {

std::string render_rational(const Rational& r) {
    return r.get_str();
}

// One flattened product term: sign split off unless the coefficient is
// genuinely complex, in which case it renders as a parenthesized literal.
struct Piece {
    bool neg = false;
    std::string text;
};

std::string slot_name(std::size_t slot) {
    if (slot == Monomial::slot_tau)
        return "tau";
    if (slot == Monomial::slot_t)
        return "t";
    if (slot == Monomial::slot_b)
        return "b";
    std::ostringstream os;
    os << "x" << (slot - Monomial::slot_b);
    return os.str();
}

Piece make_piece(Form::Mask mask, const Monomial& mono, const GaussRat& c) {
    Piece p;
    std::vector<std::string> factors;

    std::string coeff;
    bool coeff_is_one = false;
    if (c.im == 0) {
        p.neg = c.re < 0;
        Rational mag = abs(c.re);
        coeff_is_one = (mag == 1);
        coeff = render_rational(mag);
    } else if (c.re == 0) {
        p.neg = c.im < 0;
        Rational mag = abs(c.im);
        if (mag == 1) {
            coeff_is_one = true; // renders as the bare factor "i"
        } else {
            coeff = render_rational(mag);
        }
        factors.push_back("i");
        if (!coeff_is_one)
            factors.insert(factors.begin(), coeff);
        coeff.clear();
        coeff_is_one = true; // already emitted
    } else {
        std::ostringstream os;
        os << "(" << render_rational(c.re);
        Rational mag = abs(c.im);
        os << (c.im < 0 ? "-" : "+");
        if (mag != 1)
            os << render_rational(mag) << "*";
        os << "i)";
        factors.push_back(os.str());
        coeff_is_one = true;
    }
    if (!coeff_is_one && !coeff.empty())
        factors.insert(factors.begin(), coeff);

    bool bare_one = coeff_is_one && factors.empty();

    for (std::size_t slot = 0; slot < mono.width(); ++slot) {
        std::uint32_t e = mono.exp(slot);
        if (e == 0)
            continue;
        std::ostringstream os;
        os << slot_name(slot);
        if (e > 1)
            os << "^" << e;
        factors.push_back(os.str());
        bare_one = false;
    }

    Form::Mask rest = mask;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        if (bit == 0) {
            factors.push_back("dt");
        } else {
            std::ostringstream os;
            os << "dx" << bit;
            factors.push_back(os.str());
        }
        bare_one = false;
    }

    if (bare_one || factors.empty()) {
        // constant term with coefficient +-1 (or exactly the magnitude)
        if (factors.empty() && coeff.empty())
            p.text = coeff_is_one ? "1" : std::string();
        if (!coeff.empty())
            p.text = coeff;
        if (p.text.empty())
            p.text = "1";
        return p;
    }

    std::ostringstream os;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k)
            os << "*";
        os << factors[k];
    }
    p.text = os.str();
    return p;
}

std::string assemble(const std::vector<Piece>& pieces) {
    if (pieces.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            if (pieces[k].neg)
                os << "-";
        } else {
            os << (pieces[k].neg ? " - " : " + ");
        }
        os << pieces[k].text;
    }
    return os.str();
}

} // namespace

std::string render_gauss(const GaussRat& c) {
    Piece p = make_piece(0, Monomial(), c);
    if (c.is_zero())
        return "0";
    return (p.neg ? "-" : "") + p.text;
}

std::string render_scalar(const Scalar& s) {
    std::vector<Piece> pieces;
    for (const auto& [mono, c] : s.terms())
        pieces.push_back(make_piece(0, mono, c));
    return assemble(pieces);
}

std::string render_form(const Form& a) {
    std::vector<Piece> pieces;
    for (const auto& [mask, s] : a.terms())
        for (const auto& [mono, c] : s.terms())
            pieces.push_back(make_piece(mask, mono, c));
    return assemble(pieces);
}

} // namespace kforms
