#ifndef HOPFFORMS_MATRIX_HPP
#define HOPFFORMS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfforms/rational.hpp"

namespace hopfforms {

/// Dense matrix over a field context F (see field.hpp).
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(rows * cols, field_.zero()) {}

    static Matrix identity(F field, size_t n) {
        Matrix m(field, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Elem> col(size_t c) const {
        std::vector<Elem> v;
        v.reserve(rows_);
        for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }
    void set_col(size_t c, const std::vector<Elem>& v) {
        for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix mul(const Matrix& other) const {
        if (cols_ != other.rows_) throw MathError("matrix dimension mismatch in mul");
        Matrix r(field_, rows_, other.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x)) continue;
                for (size_t j = 0; j < other.cols_; ++j) {
                    const Elem& y = other.at(k, j);
                    if (field_.is_zero(y)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, y));
                }
            }
        }
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (v.size() != cols_) throw MathError("matrix/vector dimension mismatch");
        std::vector<Elem> r(rows_, field_.zero());
        for (size_t j = 0; j < cols_; ++j) {
            if (field_.is_zero(v[j])) continue;
            for (size_t i = 0; i < rows_; ++i) {
                const Elem& x = at(i, j);
                if (field_.is_zero(x)) continue;
                r[i] = field_.add(r[i], field_.mul(x, v[j]));
            }
        }
        return r;
    }

    bool eq(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], other.a_[i])) return false;
        return true;
    }

    /// In-place reduction to reduced row echelon form. Pivot choice is the
    /// first nonzero entry in row-major order, so results are deterministic.
    /// Returns the pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t lead = 0;
        for (size_t r = 0; r < rows_ && lead < cols_; ++lead) {
            size_t i = r;
            while (i < rows_ && field_.is_zero(at(i, lead))) ++i;
            if (i == rows_) continue;
            swap_rows(i, r);
            Elem inv = field_.inv(at(r, lead));
            for (size_t c = lead; c < cols_; ++c) at(r, c) = field_.mul(at(r, c), inv);
            for (size_t j = 0; j < rows_; ++j) {
                if (j == r || field_.is_zero(at(j, lead))) continue;
                Elem factor = at(j, lead);
                for (size_t c = lead; c < cols_; ++c) {
                    at(j, c) = field_.sub(at(j, c), field_.mul(factor, at(r, c)));
                }
            }
            pivots.push_back(lead);
            ++r;
        }
        return pivots;
    }

private:
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    F field_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
size_t matrix_rank(Matrix<F> m) {
    return m.rref().size();
}

/// Kernel basis in reduced echelon form (one vector per free column),
/// returned as columns of the result.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
    const F field = m.field();
    size_t n = m.cols();
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    size_t nullity = n - pivots.size();
    Matrix<F> ker(field, n, nullity);
    size_t kcol = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker.at(c, kcol) = field.one();
        for (size_t r = 0; r < pivots.size(); ++r) {
            ker.at(pivots[r], kcol) = field.neg(m.at(r, c));
        }
        ++kcol;
    }
    return ker;
}

/// Solves A x = b exactly; nullopt when inconsistent. With a non-unique
/// solution the free variables are set to zero (deterministic).
template <class F>
std::optional<std::vector<typename F::Elem>> solve_linear(
    const Matrix<F>& a, const std::vector<typename F::Elem>& b) {
    const F& field = a.field();
    Matrix<F> aug(field, a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<typename F::Elem> x(a.cols(), field.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

template <class F>
Matrix<F> matrix_inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw MathError("inverse of non-square matrix");
    const F& field = a.field();
    size_t n = a.rows();
    Matrix<F> aug(field, n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = field.one();
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != n || pivots.back() != n - 1)
        throw MathError("inverse of singular matrix");
    Matrix<F> inv(field, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

/// Repeated coordinate extraction against a fixed full-column-rank basis.
/// Row-reduces [B | I] once; express() then costs one sparse matrix-vector
/// product per call and certifies span membership exactly.
template <class F>
class ColumnSpanSolver {
public:
    explicit ColumnSpanSolver(const Matrix<F>& basis)
        : field_(basis.field()), n_(basis.cols()), big_n_(basis.rows()),
          transform_(field_, 0, 0) {
        Matrix<F> aug(field_, big_n_, n_ + big_n_);
        for (size_t r = 0; r < big_n_; ++r) {
            for (size_t c = 0; c < n_; ++c) aug.at(r, c) = basis.at(r, c);
            aug.at(r, n_ + r) = field_.one();
        }
        std::vector<size_t> pivots = aug.rref();
        // the basis has full column rank iff the first n_ pivots of [B | I]
        // sit in the B block, i.e. pivots 0..n_-1 are columns 0..n_-1
        full_rank_ = pivots.size() >= n_ && (n_ == 0 || pivots[n_ - 1] == n_ - 1);
        if (!full_rank_) throw MathError("ColumnSpanSolver: basis columns are dependent");
        transform_ = Matrix<F>(field_, big_n_, big_n_);
        for (size_t r = 0; r < big_n_; ++r)
            for (size_t c = 0; c < big_n_; ++c) transform_.at(r, c) = aug.at(r, n_ + c);
    }

    /// Coordinates of v in the basis, or nullopt when v is outside the span.
    std::optional<std::vector<typename F::Elem>> express(
        const std::vector<typename F::Elem>& v) const {
        std::vector<typename F::Elem> y(big_n_, field_.zero());
        for (size_t j = 0; j < big_n_; ++j) {
            if (field_.is_zero(v[j])) continue;
            for (size_t i = 0; i < big_n_; ++i) {
                const auto& t = transform_.at(i, j);
                if (field_.is_zero(t)) continue;
                y[i] = field_.add(y[i], field_.mul(t, v[j]));
            }
        }
        for (size_t i = n_; i < big_n_; ++i) {
            if (!field_.is_zero(y[i])) return std::nullopt;
        }
        y.resize(n_);
        return y;
    }

private:
    F field_;
    size_t n_, big_n_;
    bool full_rank_;
    Matrix<F> transform_;
};

}  // namespace hopfforms

#endif
