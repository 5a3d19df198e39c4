#pragma once

#include <vector>

#include "kforms/form.hpp"

namespace kforms {

// Dense matrix of forms over a fixed base, row-major. Multiplication is
// wedge-and-sum, so degree bookkeeping is inherited from Form.
class FormMatrix {
public:
    FormMatrix() : rows_(0), cols_(0), dim_(0), cyl_(false) {}
    FormMatrix(unsigned rows, unsigned cols, unsigned dim, bool cylinder = false);
    static FormMatrix identity(unsigned n, unsigned dim, bool cylinder = false);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned dim() const { return dim_; }
    bool cylinder() const { return cyl_; }
    bool is_square() const { return rows_ == cols_; }

    Form& at(unsigned r, unsigned c) { return ents_[r * cols_ + c]; }
    const Form& at(unsigned r, unsigned c) const { return ents_[r * cols_ + c]; }

    bool is_zero() const;
    bool entries_homogeneous(unsigned k) const; // zero entries pass
    bool entries_even() const;
    bool entries_degree0() const;

    FormMatrix transpose() const;
    FormMatrix conj() const;
    FormMatrix conj_transpose() const;
    FormMatrix to_cylinder() const;
    FormMatrix restrict_t(const Rational& value) const;
    Form trace() const;

    FormMatrix& operator+=(const FormMatrix& o);
    FormMatrix& operator-=(const FormMatrix& o);
    friend FormMatrix operator+(FormMatrix a, const FormMatrix& b) { return a += b; }
    friend FormMatrix operator-(FormMatrix a, const FormMatrix& b) { return a -= b; }
    friend FormMatrix operator-(const FormMatrix& a);
    friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
    friend FormMatrix operator*(const Scalar& c, const FormMatrix& a);
    friend FormMatrix operator*(const Form& c, const FormMatrix& a);
    friend bool operator==(const FormMatrix& a, const FormMatrix& b);
    friend bool operator!=(const FormMatrix& a, const FormMatrix& b) { return !(a == b); }

private:
    unsigned rows_, cols_, dim_;
    bool cyl_;
    std::vector<Form> ents_;
};

FormMatrix ext_d(const FormMatrix& a);
Form det(const FormMatrix& a); // square, even entries
FormMatrix block_diag(const FormMatrix& a, const FormMatrix& b);

// Inverse of a degree-0 matrix whose determinant is a nonzero constant,
// via adjugate over determinant; exact and polynomial.
FormMatrix adjugate_inverse(const FormMatrix& a);

// Connection on the trivial rank-n bundle over R^m: a matrix of 1-forms.
class Connection {
public:
    explicit Connection(FormMatrix a);
    static Connection zero(unsigned rank, unsigned dim);

    const FormMatrix& matrix() const { return a_; }
    unsigned rank() const { return a_.rows(); }
    unsigned dim() const { return a_.dim(); }

    friend bool operator==(const Connection& a, const Connection& b) {
        return a.a_ == b.a_;
    }
    friend bool operator!=(const Connection& a, const Connection& b) { return !(a == b); }

private:
    FormMatrix a_;
};

// Connection on the pullback bundle over R^m x [0,1]; slicing at fixed t
// gives connections on the base.
class ConnectionPath {
public:
    explicit ConnectionPath(FormMatrix a);

    const FormMatrix& matrix() const { return a_; }
    unsigned rank() const { return a_.rows(); }
    unsigned dim() const { return a_.dim(); }

    Connection at(const Rational& t_value) const;
    Connection endpoint0() const { return at(Rational(0)); }
    Connection endpoint1() const { return at(Rational(1)); }

private:
    FormMatrix a_;
};

FormMatrix curvature(const Connection& c);      // dA + A ^ A
FormMatrix curvature(const ConnectionPath& c);

// Bundle automorphism: degree-0 matrix with constant nonzero determinant,
// so the inverse is again polynomial.
class Gauge {
public:
    explicit Gauge(FormMatrix g);
    static Gauge identity(unsigned n, unsigned dim, bool cylinder = false);

    const FormMatrix& matrix() const { return g_; }
    const FormMatrix& inverse() const { return inv_; }
    unsigned rank() const { return g_.rows(); }
    unsigned dim() const { return g_.dim(); }

private:
    Gauge(FormMatrix g, FormMatrix inv) : g_(std::move(g)), inv_(std::move(inv)) {}
    FormMatrix g_, inv_;

    friend Gauge direct_sum(const Gauge& a, const Gauge& b);
};

// Hermitian metric h = conj(g)^T g built from a unimodular factor g
// (degree-0 matrix, constant nonzero determinant). Stores h and its exact
// polynomial inverse.
class Metric {
public:
    explicit Metric(const FormMatrix& unimodular_factor);
    static Metric identity(unsigned n, unsigned dim);

    const FormMatrix& h() const { return h_; }
    const FormMatrix& h_inverse() const { return hinv_; }
    unsigned rank() const { return h_.rows(); }
    unsigned dim() const { return h_.dim(); }

private:
    Metric(FormMatrix h, FormMatrix hinv) : h_(std::move(h)), hinv_(std::move(hinv)) {}
    FormMatrix h_, hinv_;

    friend Metric direct_sum(const Metric& a, const Metric& b);
};

Connection gauge_transform(const Gauge& g, const Connection& c);
ConnectionPath gauge_transform(const Gauge& g, const ConnectionPath& c);

// Adjoint with respect to the metric: A* = h^{-1} (dh - conj(A)^T h);
// characterized by dh = conj(A)^T h + h A*.
Connection adjoint(const Connection& c, const Metric& m);
Connection unitarize(const Connection& c, const Metric& m); // (A + A*)/2

Connection direct_sum(const Connection& a, const Connection& b);
Gauge direct_sum(const Gauge& a, const Gauge& b);
Metric direct_sum(const Metric& a, const Metric& b);

} // namespace kforms
