#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "screw/error.hpp"
#include "screw/scalar.hpp"

namespace screw {

/// Dense row-major matrix over an exact rational or float64 scalar.
/// Values are immutable in spirit: every operation returns a fresh matrix.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<S> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        if (a_.size() != rows * cols) fail(Errc::InvalidInput, "entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) fail(Errc::InvalidInput, "dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& v = (*this)(i, k);
                if (ScalarTraits<S>::exact && ScalarTraits<S>::is_zero(v)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix scaled(const S& c) const {
        Matrix r = *this;
        for (auto& v : r.a_) v *= c;
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    S max_abs() const {
        S m(0);
        for (const auto& v : a_) {
            S av = ScalarTraits<S>::abs(v);
            if (av > m) m = av;
        }
        return m;
    }

    bool is_zero() const {
        S scale = max_abs();
        (void)scale;
        for (const auto& v : a_)
            if (!ScalarTraits<S>::is_zero(v)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        S scale = max_abs();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!ScalarTraits<S>::is_zero((*this)(i, j) - (*this)(j, i), scale)) return false;
        return true;
    }

    /// Entrywise near-equality at the mode's tolerance (exact for rationals).
    bool approx_equals(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        S scale = max_abs();
        S oscale = o.max_abs();
        if (oscale > scale) scale = oscale;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!ScalarTraits<S>::is_zero(a_[i] - o.a_[i], scale)) return false;
        return true;
    }

    Matrix column(std::size_t j) const {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const Matrix& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
    }

    /// Horizontal concatenation [A | B].
    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) fail(Errc::InvalidInput, "hcat row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::InvalidInput, "shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<S> a_;
};

namespace detail {

// Reduced row echelon form in place; returns pivot column indices.
// Pivot threshold is tau * max(1, largest absolute entry) of the input
// (trivially "nonzero" in rational mode).
template <class S>
std::vector<std::size_t> rref_in_place(Matrix<S>& m) {
    const S scale = m.max_abs();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // best pivot in this column (largest magnitude keeps float mode stable)
        std::size_t best = row;
        S best_abs = ScalarTraits<S>::abs(m(row, col));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            S av = ScalarTraits<S>::abs(m(i, col));
            if (av > best_abs) {
                best_abs = av;
                best = i;
            }
        }
        if (ScalarTraits<S>::is_zero(m(best, col), scale)) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        const S inv_pivot = S(1) / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv_pivot;
        m(row, col) = S(1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const S f = m(i, col);
            if (ScalarTraits<S>::exact && ScalarTraits<S>::is_zero(f)) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
            m(i, col) = S(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

template <class S>
std::size_t rank(const Matrix<S>& m) {
    Matrix<S> r = m;
    return detail::rref_in_place(r).size();
}

/// Canonical nullspace basis: reduced-echelon, pivot-ordered. Columns span
/// {x : Mx = 0}; the free variable of basis vector k carries coefficient 1.
template <class S>
Matrix<S> null_space(const Matrix<S>& m) {
    Matrix<S> r = m;
    const auto pivots = detail::rref_in_place(r);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (p < pivots.size() && pivots[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    Matrix<S> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = S(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], k) = -r(p, free_cols[k]);
    }
    return basis;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) fail(Errc::InvalidInput, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug = Matrix<S>::hcat(m, Matrix<S>::identity(n));
    const auto pivots = detail::rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        fail(Errc::Singular, "matrix is singular");
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class S>
S determinant(const Matrix<S>& m) {
    if (m.rows() != m.cols()) fail(Errc::InvalidInput, "determinant of non-square matrix");
    Matrix<S> a = m;
    const S scale = a.max_abs();
    const std::size_t n = a.rows();
    S det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        S best_abs = ScalarTraits<S>::abs(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            S av = ScalarTraits<S>::abs(a(i, col));
            if (av > best_abs) {
                best_abs = av;
                best = i;
            }
        }
        if (ScalarTraits<S>::is_zero(a(best, col), scale)) return S(0);
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(best, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        const S inv_pivot = S(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const S f = a(i, col) * inv_pivot;
            if (ScalarTraits<S>::exact && ScalarTraits<S>::is_zero(f)) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

/// Canonical basis of the column space: RREF of the transpose, rows returned
/// as columns. Deterministic for golden outputs.
template <class S>
Matrix<S> column_space_basis(const Matrix<S>& m) {
    Matrix<S> t = m.transpose();
    const auto pivots = detail::rref_in_place(t);
    Matrix<S> basis(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = t(k, i);
    return basis;
}

} // namespace screw
