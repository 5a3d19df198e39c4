#include "kforms/matrix.hpp"

#include <bit>
#include <map>

namespace kforms {

namespace {

void require_shape(const FormMatrix& a, const FormMatrix& b, const char* what) {
    if (a.dim() != b.dim() || a.cylinder() != b.cylinder())
        throw DimensionMismatch(std::string(what) + ": base spaces differ");
}

FormMatrix minor_of(const FormMatrix& a, unsigned row, unsigned col) {
    FormMatrix m(a.rows() - 1, a.cols() - 1, a.dim(), a.cylinder());
    for (unsigned r = 0, mr = 0; r < a.rows(); ++r) {
        if (r == row)
            continue;
        for (unsigned c = 0, mc = 0; c < a.cols(); ++c) {
            if (c == col)
                continue;
            m.at(mr, mc) = a.at(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

} // namespace

FormMatrix::FormMatrix(unsigned rows, unsigned cols, unsigned dim, bool cylinder)
    : rows_(rows), cols_(cols), dim_(dim), cyl_(cylinder),
      ents_(std::size_t(rows) * cols, Form::zero(dim, cylinder)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix must have positive shape");
}

FormMatrix FormMatrix::identity(unsigned n, unsigned dim, bool cylinder) {
    FormMatrix m(n, n, dim, cylinder);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = Form::unit(dim, cylinder);
    return m;
}

bool FormMatrix::is_zero() const {
    for (const auto& e : ents_)
        if (!e.is_zero())
            return false;
    return true;
}

bool FormMatrix::entries_homogeneous(unsigned k) const {
    for (const auto& e : ents_)
        if (!e.is_homogeneous(k))
            return false;
    return true;
}

bool FormMatrix::entries_even() const {
    for (const auto& e : ents_)
        if (!e.is_even())
            return false;
    return true;
}

bool FormMatrix::entries_degree0() const {
    return entries_homogeneous(0);
}

FormMatrix FormMatrix::transpose() const {
    FormMatrix m(cols_, rows_, dim_, cyl_);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

FormMatrix FormMatrix::conj() const {
    FormMatrix m(rows_, cols_, dim_, cyl_);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c).conj();
    return m;
}

FormMatrix FormMatrix::conj_transpose() const { return conj().transpose(); }

FormMatrix FormMatrix::to_cylinder() const {
    FormMatrix m(rows_, cols_, dim_, true);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c).to_cylinder();
    return m;
}

FormMatrix FormMatrix::restrict_t(const Rational& value) const {
    FormMatrix m(rows_, cols_, dim_, false);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c).restrict_t(value);
    return m;
}

Form FormMatrix::trace() const {
    if (!is_square())
        throw DimensionMismatch("trace needs a square matrix");
    Form t = Form::zero(dim_, cyl_);
    for (unsigned i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

FormMatrix& FormMatrix::operator+=(const FormMatrix& o) {
    require_shape(*this, o, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < ents_.size(); ++i)
        ents_[i] += o.ents_[i];
    return *this;
}

FormMatrix& FormMatrix::operator-=(const FormMatrix& o) {
    require_shape(*this, o, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < ents_.size(); ++i)
        ents_[i] -= o.ents_[i];
    return *this;
}

FormMatrix operator-(const FormMatrix& a) {
    FormMatrix m(a.rows_, a.cols_, a.dim_, a.cyl_);
    for (std::size_t i = 0; i < a.ents_.size(); ++i)
        m.ents_[i] = -a.ents_[i];
    return m;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
    require_shape(a, b, "matrix product");
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: shapes do not compose");
    FormMatrix m(a.rows_, b.cols_, a.dim_, a.cyl_);
    for (unsigned r = 0; r < a.rows_; ++r)
        for (unsigned c = 0; c < b.cols_; ++c) {
            Form s = Form::zero(a.dim_, a.cyl_);
            for (unsigned k = 0; k < a.cols_; ++k)
                s += a.at(r, k) * b.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

FormMatrix operator*(const Scalar& c, const FormMatrix& a) {
    FormMatrix m(a.rows_, a.cols_, a.dim_, a.cyl_);
    for (std::size_t i = 0; i < a.ents_.size(); ++i)
        m.ents_[i] = c * a.ents_[i];
    return m;
}

FormMatrix operator*(const Form& c, const FormMatrix& a) {
    FormMatrix m(a.rows_, a.cols_, a.dim_, a.cyl_);
    for (std::size_t i = 0; i < a.ents_.size(); ++i)
        m.ents_[i] = c * a.ents_[i];
    return m;
}

bool operator==(const FormMatrix& a, const FormMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dim_ == b.dim_ &&
           a.cyl_ == b.cyl_ && a.ents_ == b.ents_;
}

FormMatrix ext_d(const FormMatrix& a) {
    FormMatrix m(a.rows(), a.cols(), a.dim(), a.cylinder());
    for (unsigned r = 0; r < a.rows(); ++r)
        for (unsigned c = 0; c < a.cols(); ++c)
            m.at(r, c) = ext_d(a.at(r, c));
    return m;
}

Form det(const FormMatrix& a) {
    if (!a.is_square())
        throw DimensionMismatch("det needs a square matrix");
    if (!a.entries_even())
        throw DimensionMismatch("det needs even entries");
    if (a.rows() == 1)
        return a.at(0, 0);
    // Row-by-row expansion over column subsets. Shares minors between
    // cofactor branches and skips zero entries, so block-diagonal input
    // costs little more than its blocks.
    const unsigned n = a.rows();
    std::map<std::uint32_t, Form> acc;
    acc.emplace(0u, Form::unit(a.dim(), a.cylinder()));
    for (unsigned r = 0; r < n; ++r) {
        std::map<std::uint32_t, Form> next;
        for (const auto& [mask, f] : acc) {
            if (f.is_zero())
                continue;
            for (unsigned c = 0; c < n; ++c) {
                const std::uint32_t bit = 1u << c;
                if (mask & bit)
                    continue;
                const Form& e = a.at(r, c);
                if (e.is_zero())
                    continue;
                Form term = f * e;
                // Inversions added by assigning column c in this row: the
                // previously used columns above c.
                if (std::popcount(mask >> (c + 1)) & 1)
                    term = -term;
                auto it = next.find(mask | bit);
                if (it == next.end())
                    next.emplace(mask | bit, std::move(term));
                else
                    it->second += term;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find((1u << n) - 1u);
    return it == acc.end() ? Form::zero(a.dim(), a.cylinder()) : std::move(it->second);
}

FormMatrix block_diag(const FormMatrix& a, const FormMatrix& b) {
    require_shape(a, b, "block_diag");
    FormMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.dim(), a.cylinder());
    for (unsigned r = 0; r < a.rows(); ++r)
        for (unsigned c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (unsigned r = 0; r < b.rows(); ++r)
        for (unsigned c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
}

FormMatrix adjugate_inverse(const FormMatrix& a) {
    if (!a.is_square())
        throw DimensionMismatch("inverse needs a square matrix");
    if (!a.entries_degree0())
        throw NotInvertible("inverse needs a degree-0 matrix");
    Form d = det(a);
    Scalar ds = d.degree0();
    if (!ds.is_constant() || ds.is_zero())
        throw NotInvertible("determinant must be a nonzero constant");
    GaussRat dinv = ds.constant_part().inverse();
    unsigned n = a.rows();
    FormMatrix inv(n, n, a.dim(), a.cylinder());
    if (n == 1) {
        inv.at(0, 0) = dinv * Form::unit(a.dim(), a.cylinder());
        return inv;
    }
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) {
            Form cof = det(minor_of(a, c, r)); // adjugate transposes
            if ((r + c) & 1)
                cof = -cof;
            inv.at(r, c) = dinv * cof;
        }
    return inv;
}

Connection::Connection(FormMatrix a) : a_(std::move(a)) {
    if (!a_.is_square())
        throw DimensionMismatch("connection matrix must be square");
    if (a_.cylinder())
        throw DimensionMismatch("connection lives on the base; use ConnectionPath");
    if (!a_.entries_homogeneous(1))
        throw DimensionMismatch("connection entries must be 1-forms");
}

Connection Connection::zero(unsigned rank, unsigned dim) {
    return Connection(FormMatrix(rank, rank, dim, false));
}

ConnectionPath::ConnectionPath(FormMatrix a) : a_(std::move(a)) {
    if (!a_.is_square())
        throw DimensionMismatch("connection matrix must be square");
    if (!a_.cylinder())
        throw DimensionMismatch("a connection path lives on the cylinder");
    if (!a_.entries_homogeneous(1))
        throw DimensionMismatch("connection entries must be 1-forms");
}

Connection ConnectionPath::at(const Rational& t_value) const {
    return Connection(a_.restrict_t(t_value));
}

FormMatrix curvature(const Connection& c) {
    return ext_d(c.matrix()) + c.matrix() * c.matrix();
}

FormMatrix curvature(const ConnectionPath& c) {
    return ext_d(c.matrix()) + c.matrix() * c.matrix();
}

Gauge::Gauge(FormMatrix g) : g_(std::move(g)), inv_() {
    if (!g_.is_square())
        throw DimensionMismatch("gauge matrix must be square");
    inv_ = adjugate_inverse(g_); // validates degree 0 and constant determinant
}

Gauge Gauge::identity(unsigned n, unsigned dim, bool cylinder) {
    return Gauge(FormMatrix::identity(n, dim, cylinder));
}

Metric::Metric(const FormMatrix& unimodular_factor) : h_(), hinv_() {
    if (!unimodular_factor.is_square())
        throw DimensionMismatch("metric factor must be square");
    if (unimodular_factor.cylinder())
        throw DimensionMismatch("metric factor lives on the base");
    h_ = unimodular_factor.conj_transpose() * unimodular_factor;
    hinv_ = adjugate_inverse(h_); // validates the unimodularity
}

Metric Metric::identity(unsigned n, unsigned dim) {
    return Metric(FormMatrix::identity(n, dim, false));
}

Connection gauge_transform(const Gauge& g, const Connection& c) {
    if (g.dim() != c.dim() || g.rank() != c.rank() || g.matrix().cylinder())
        throw DimensionMismatch("gauge_transform: gauge does not fit");
    return Connection(g.inverse() * ext_d(g.matrix()) +
                      g.inverse() * c.matrix() * g.matrix());
}

ConnectionPath gauge_transform(const Gauge& g, const ConnectionPath& c) {
    if (g.dim() != c.dim() || g.rank() != c.rank() || !g.matrix().cylinder())
        throw DimensionMismatch("gauge_transform: gauge does not fit");
    return ConnectionPath(g.inverse() * ext_d(g.matrix()) +
                          g.inverse() * c.matrix() * g.matrix());
}

Connection adjoint(const Connection& c, const Metric& m) {
    if (m.dim() != c.dim() || m.rank() != c.rank())
        throw DimensionMismatch("adjoint: metric does not fit");
    FormMatrix ah = c.matrix().conj_transpose();
    return Connection(m.h_inverse() * (ext_d(m.h()) - ah * m.h()));
}

Connection unitarize(const Connection& c, const Metric& m) {
    Connection star = adjoint(c, m);
    return Connection(Scalar::rational(frac(1, 2)) *
                      (c.matrix() + star.matrix()));
}

Connection direct_sum(const Connection& a, const Connection& b) {
    return Connection(block_diag(a.matrix(), b.matrix()));
}

Gauge direct_sum(const Gauge& a, const Gauge& b) {
    return Gauge(block_diag(a.g_, b.g_), block_diag(a.inv_, b.inv_));
}

Metric direct_sum(const Metric& a, const Metric& b) {
    return Metric(block_diag(a.h_, b.h_), block_diag(a.hinv_, b.hinv_));
}

} // namespace kforms
