#pragma once

#include "hgx/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hgx {

/// Dense matrix over Q(i)(q).  Truncated bases stay small, so no sparse
/// bookkeeping is attempted.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
        return m;
    }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

inline RrefResult rref(ExactMatrix m) {
    RrefResult out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        // prefer a pivot with small representation to limit coefficient growth
        std::size_t pivot = m.rows();
        int best = -1;
        for (std::size_t r = lead; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            int sz = m.at(r, col).num().degree() + m.at(r, col).den().degree();
            if (pivot == m.rows() || sz < best) {
                pivot = r;
                best = sz;
            }
        }
        if (pivot == m.rows()) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(lead, j));
        Scalar inv = m.at(lead, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m.at(lead, j).is_zero())
                    m.at(r, j) -= f * m.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

/// Basis of the right null space: vectors v with m v = 0.
inline std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols());
        v[free_col] = Scalar(1);
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -r.matrix.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<std::vector<Scalar>> solve(const ExactMatrix& m,
                                                const std::vector<Scalar>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    RrefResult red = rref(std::move(aug));
    std::vector<Scalar> x(m.cols());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
        if (red.pivot_cols[k] == m.cols()) return std::nullopt; // pivot in rhs column
        x[red.pivot_cols[k]] = red.matrix.at(k, m.cols());
    }
    return x;
}

/// Incremental row-space container: supports "reduce a vector against the
/// rows seen so far" plus insertion, used for spans and quotients where a
/// one-shot RREF over all generators would be wasteful.
class RowSpan {
public:
    explicit RowSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v modulo the span in place; returns true if v was already in
    /// the span (reduced to zero).
    bool reduce(std::vector<Scalar>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& x = v[leads_[k]];
            if (x.is_zero()) continue;
            Scalar f = x;
            const auto& row = rows_[k];
            for (std::size_t j = 0; j < dim_; ++j)
                if (!row[j].is_zero()) v[j] -= f * row[j];
        }
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }

    /// Reduces and, when nonzero remains, inserts the normalized remainder.
    /// Returns true when the vector enlarged the span.
    bool insert(std::vector<Scalar> v) {
        if (reduce(v)) return false;
        std::size_t lead = 0;
        while (v[lead].is_zero()) ++lead;
        Scalar inv = v[lead].inverse();
        for (auto& s : v)
            if (!s.is_zero()) s *= inv;
        // back-substitute into existing rows to stay fully reduced
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Scalar f = rows_[k][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        leads_.insert(leads_.begin() + pos, lead);
        return true;
    }

    bool contains(std::vector<Scalar> v) const { return reduce(v); }

    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& leads() const { return leads_; }

private:
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> leads_;
};

/// Incremental column-space solver with coefficient tracking.  Columns of a
/// linear map are inserted one at a time; each stored row [v | c] maintains
/// the invariant v = M c over the columns inserted so far.  Dependent
/// columns yield exact kernel vectors, and solve() recovers coordinates of
/// any vector of the column span.
class SpanSolver {
public:
    explicit SpanSolver(std::size_t ambient_dim) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t columns() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Scalar>>& kernel_basis() const { return kernel_; }

    /// Insert the next column; returns false when it was dependent (in which
    /// case a kernel vector has been recorded).
    bool add_column(const std::vector<Scalar>& col) {
        if (col.size() != dim_) throw std::invalid_argument("SpanSolver: column size mismatch");
        std::vector<Scalar> v = col;
        std::vector<Scalar> c(ncols_ + 1);
        c[ncols_] = Scalar(1);
        reduce_pair(v, c);
        ++ncols_;
        for (auto& row : coefs_) row.resize(ncols_);
        std::size_t lead = dim_;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) {
                lead = k;
                break;
            }
        if (lead == dim_) {
            c.resize(ncols_);
            kernel_.push_back(std::move(c)); // M c = 0 with c[ncols-1] = 1
            return false;
        }
        Scalar inv = v[lead].inverse();
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
        for (auto& x : c)
            if (!x.is_zero()) x *= inv;
        c.resize(ncols_);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Scalar f = rows_[k][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!c[j].is_zero()) coefs_[k][j] -= f * c[j];
        }
        std::size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        coefs_.insert(coefs_.begin() + pos, std::move(c));
        leads_.insert(leads_.begin() + pos, lead);
        return true;
    }

    /// Coordinates x (over inserted columns) with M x = target, if any.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& target) const {
        std::vector<Scalar> v = target;
        std::vector<Scalar> c(ncols_);
        reduce_pair(v, c);
        for (const auto& s : v)
            if (!s.is_zero()) return std::nullopt;
        for (auto& s : c) s = -s;
        return c;
    }

    bool contains(const std::vector<Scalar>& target) const {
        std::vector<Scalar> v = target;
        std::vector<Scalar> c(ncols_);
        reduce_pair(v, c);
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }

private:
    void reduce_pair(std::vector<Scalar>& v, std::vector<Scalar>& c) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& x = v[leads_[k]];
            if (x.is_zero()) continue;
            Scalar f = x;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
            for (std::size_t j = 0; j < coefs_[k].size() && j < c.size(); ++j)
                if (!coefs_[k][j].is_zero()) c[j] -= f * coefs_[k][j];
        }
    }

    std::size_t dim_;
    std::size_t ncols_ = 0;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::vector<Scalar>> coefs_;
    std::vector<std::size_t> leads_;
    std::vector<std::vector<Scalar>> kernel_;
};

} // namespace hgx
