#include "kforms/parse.hpp"

#include <cctype>
#include <optional>

namespace kforms {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind = Tok::end;
    std::string text; // ident name or number literal
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    [[noreturn]] void fail(const std::string& msg, int line, int col) {
        throw ParseError(msg, line, col);
    }

    char at(std::size_t k) const { return k < src_.size() ? src_[k] : '\0'; }

    void bump() {
        if (at(pos_) == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
        cur_ = Token{Tok::end, "", line_, col_};
        if (pos_ >= src_.size())
            return;
        char c = src_[pos_];
        cur_.line = line_;
        cur_.column = col_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(at(pos_)))) {
                num += at(pos_);
                bump();
            }
            // p/q with the slash directly attached
            if (at(pos_) == '/' && std::isdigit(static_cast<unsigned char>(at(pos_ + 1)))) {
                num += '/';
                bump();
                while (std::isdigit(static_cast<unsigned char>(at(pos_)))) {
                    num += at(pos_);
                    bump();
                }
            }
            cur_.kind = Tok::number;
            cur_.text = num;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (std::isalnum(static_cast<unsigned char>(at(pos_)))) {
                id += at(pos_);
                bump();
            }
            cur_.kind = Tok::ident;
            cur_.text = id;
            return;
        }
        switch (c) {
        case '+': cur_.kind = Tok::plus; break;
        case '-': cur_.kind = Tok::minus; break;
        case '*': cur_.kind = Tok::star; break;
        case '^': cur_.kind = Tok::caret; break;
        case '(': cur_.kind = Tok::lparen; break;
        case ')': cur_.kind = Tok::rparen; break;
        default:
            fail(std::string("unexpected character '") + c + "'", line_, col_);
        }
        bump();
    }
};

class Parser {
public:
    Parser(const std::string& src, unsigned dim, bool cylinder)
        : lex_(src), dim_(dim), cyl_(cylinder) {
        if (dim < 1 || dim > 16)
            throw UsageError("dimension must be between 1 and 16");
    }

    Form run() {
        Form f = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            throw ParseError("unexpected trailing input", t.line, t.column);
        return f;
    }

private:
    Lexer lex_;
    unsigned dim_;
    bool cyl_;

    Form expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        }
        Form acc = term();
        if (neg)
            acc = -acc;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Token op = lex_.take();
            Form rhs = term();
            if (op.kind == Tok::plus)
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Form term() {
        Form acc = powfactor();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            acc = acc * powfactor();
        }
        return acc;
    }

    // '^' binds tighter than '*': 2*x1^2 squares x1, not 2*x1.
    Form powfactor() {
        Form acc = factor();
        while (lex_.peek().kind == Tok::caret) {
            lex_.take();
            if (lex_.peek().kind == Tok::number) {
                Token e = lex_.take();
                acc = power(acc, e);
            } else {
                acc = acc * factor();
            }
        }
        return acc;
    }

    Form power(const Form& base, const Token& e) {
        if (e.text.find('/') != std::string::npos)
            throw ParseError("exponent must be a nonnegative integer", e.line, e.column);
        unsigned long n = 0;
        try {
            n = std::stoul(e.text);
        } catch (...) {
            throw ParseError("exponent out of range", e.line, e.column);
        }
        Form acc = Form::unit(dim_, cyl_);
        for (unsigned long k = 0; k < n; ++k)
            acc = acc * base;
        return acc;
    }

    Form factor() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::number: {
            Rational q(t.text);
            if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
                throw ParseError("zero denominator", t.line, t.column);
            q.canonicalize();
            return Form::scalar(dim_, Scalar::rational(q), cyl_);
        }
        case Tok::ident:
            return ident(t);
        case Tok::lparen: {
            Form inner = expr();
            Token close = lex_.take();
            if (close.kind != Tok::rparen)
                throw ParseError("expected ')'", close.line, close.column);
            return inner;
        }
        default:
            throw ParseError("expected a number, a variable, or '('", t.line, t.column);
        }
    }

    unsigned index_of(const Token& t, const std::string& digits) {
        if (digits.empty())
            throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        unsigned long k = 0;
        try {
            k = std::stoul(digits);
        } catch (...) {
            throw ParseError("generator index out of range", t.line, t.column);
        }
        if (k < 1 || k > dim_)
            throw ParseError("generator index exceeds dimension " + std::to_string(dim_),
                             t.line, t.column);
        return unsigned(k);
    }

    Form ident(const Token& t) {
        const std::string& id = t.text;
        if (id == "i")
            return Form::scalar(dim_, Scalar::imag_unit(), cyl_);
        if (id == "tau")
            return Form::scalar(dim_, Scalar::tau(), cyl_);
        if (id == "t") {
            if (!cyl_)
                throw ParseError("t is only available on the cylinder", t.line, t.column);
            return Form::scalar(dim_, Scalar::t(), cyl_);
        }
        if (id == "dt") {
            if (!cyl_)
                throw ParseError("dt is only available on the cylinder", t.line, t.column);
            return Form::dt(dim_);
        }
        if (id.size() > 1 && id[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(id[1]))) {
            unsigned k = index_of(t, id.substr(1));
            return Form::scalar(dim_, Scalar::x(k), cyl_);
        }
        if (id.size() > 2 && id[0] == 'd' && id[1] == 'x' &&
            std::isdigit(static_cast<unsigned char>(id[2]))) {
            unsigned k = index_of(t, id.substr(2));
            return Form::dx(dim_, k, cyl_);
        }
        throw ParseError("unknown variable '" + id + "'", t.line, t.column);
    }
};

} // namespace

Form parse_form(const std::string& src, unsigned dimension) {
    return Parser(src, dimension, false).run();
}

Form parse_form_cylinder(const std::string& src, unsigned dimension) {
    return Parser(src, dimension, true).run();
}

Scalar parse_scalar(const std::string& src, unsigned dimension) {
    Form f = parse_form(src, dimension);
    if (!f.is_homogeneous(0))
        throw ParseError("expected a degree-0 expression", 1, 1);
    return f.degree0();
}

} // namespace kforms
