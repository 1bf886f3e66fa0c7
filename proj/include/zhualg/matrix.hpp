#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zhualg/errors.hpp"
#include "zhualg/rational.hpp"

namespace zhualg {

// Dense row-major matrix over an exact coefficient type T. T must provide
// +, -, *, /, equality, and construction from int (0 and 1).
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const T& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatchError("matrix sum shape mismatch");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatchError("matrix difference shape mismatch");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const T& v : e_)
            if (!(v == T(0))) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

namespace detail {

// Fraction-free Bareiss elimination determinant over any exact field.
// Deterministic pivoting: first nonzero entry in the current column.
template <class T>
T det_bareiss_generic(Matrix<T> m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);  // empty product convention
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m.at(p, k) == T(0)) ++p;
        if (p == n) return T(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = T(0);
        }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? T(0) - d : d;
}

// Gaussian elimination to reduced row echelon form, in place. Returns the
// pivot column of each pivot row, in order. Division-based; requires a field.
template <class T>
std::vector<std::size_t> rref_generic(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == T(0)) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        const T inv = T(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const T f = m.at(i, col);
            if (f == T(0)) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

// Exact determinant (fraction-free Bareiss). For Rational a specialization
// clears denominators row by row and eliminates over the integers, which is
// substantially faster than working over mpq.
template <class T>
T det_exact(const Matrix<T>& m) {
    return detail::det_bareiss_generic(m);
}

template <>
Rational det_exact<Rational>(const Matrix<Rational>& m);

// Solves A x = b for square nonsingular A. Throws DimensionMismatchError on
// shape violations and SingularMatrixError when A is singular. The solution
// is re-substituted and the residual checked to be exactly zero.
template <class T>
std::vector<T> solve_linear_exact(const Matrix<T>& a, const std::vector<T>& b);

// Multi right-hand-side variant: returns X with A X = B column by column.
// A is factored once, so this is the preferred form for families of systems.
template <class T>
Matrix<T> solve_linear_exact_multi(const Matrix<T>& a, const Matrix<T>& b);

// Rank over the coefficient field.
template <class T>
std::size_t rank_exact(Matrix<T> m) {
    return detail::rref_generic(m).size();
}

// Basis of the right nullspace { v : A v = 0 }.
template <class T>
std::vector<std::vector<T>> nullspace_exact(Matrix<T> m) {
    const std::size_t cols = m.cols();
    const std::vector<std::size_t> pivots = detail::rref_generic(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(cols, T(0));
        v[free_col] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = T(0) - m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace detail {

template <class T>
Matrix<T> solve_generic_multi(Matrix<T> a, Matrix<T> b) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError("linear solve requires a square matrix");
    if (b.rows() != a.rows())
        throw DimensionMismatchError("right-hand side row count mismatch");
    const std::size_t n = a.rows(), k = b.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col) == T(0)) ++p;
        if (p == n) throw SingularMatrixError("singular system in exact solve");
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(p, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(b.at(col, j), b.at(p, j));
        }
        const T inv = T(1) / a.at(col, col);
        for (std::size_t j = col; j < n; ++j) a.at(col, j) = a.at(col, j) * inv;
        for (std::size_t j = 0; j < k; ++j) b.at(col, j) = b.at(col, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const T f = a.at(i, col);
            if (f == T(0)) continue;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
            for (std::size_t j = 0; j < k; ++j) b.at(i, j) = b.at(i, j) - f * b.at(col, j);
        }
    }
    return b;
}

template <class T>
void check_residual(const Matrix<T>& a, const Matrix<T>& x, const Matrix<T>& b) {
    const Matrix<T> r = a * x - b;
    if (!r.is_zero()) throw MathError("nonzero residual after exact solve");
}

}  // namespace detail

template <class T>
Matrix<T> solve_linear_exact_multi(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> x = detail::solve_generic_multi(a, b);
    detail::check_residual(a, x, b);
    return x;
}

template <>
Matrix<Rational> solve_linear_exact_multi<Rational>(const Matrix<Rational>& a,
                                                    const Matrix<Rational>& b);

template <class T>
std::vector<T> solve_linear_exact(const Matrix<T>& a, const std::vector<T>& b) {
    if (b.size() != a.rows())
        throw DimensionMismatchError("right-hand side length mismatch");
    Matrix<T> bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm.at(i, 0) = b[i];
    const Matrix<T> xm = solve_linear_exact_multi(a, bm);
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = xm.at(i, 0);
    return x;
}

}  // namespace zhualg
