#include "zhualg/matrix.hpp"

#include <gmp.h>

#include <cstddef>
#include <vector>

namespace zhualg {

namespace {

// Flat integer matrix used by the fraction-free kernels below.
struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> e;

    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
    mpz_class& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
};

// Scales each row of [A | B] by the lcm of its denominators so every entry
// becomes an integer. Returns the per-row scale factors.
std::vector<mpz_class> clear_rows(const Matrix<Rational>& a, const Matrix<Rational>* b,
                                  ZMat& z) {
    const std::size_t n = a.rows(), m = a.cols(), k = b ? b->cols() : 0;
    std::vector<mpz_class> scale(n);
    mpz_class q;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class d(1);
        for (std::size_t j = 0; j < m; ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < k; ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), b->at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < m; ++j) {
            mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), a.at(i, j).den().get_mpz_t());
            z.at(i, j) = a.at(i, j).num() * q;
        }
        for (std::size_t j = 0; j < k; ++j) {
            mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), b->at(i, j).den().get_mpz_t());
            z.at(i, m + j) = b->at(i, j).num() * q;
        }
        scale[i] = d;
    }
    return scale;
}

// Bareiss forward elimination on the leading ncols_elim columns, carried
// across the full row width. Returns the permutation sign, or 0 when some
// pivot column is entirely zero (pivot_fail receives that column).
int bareiss_forward(ZMat& z, std::size_t ncols_elim, std::size_t* pivot_fail) {
    int sign = 1;
    mpz_class prev(1), t1, t2;
    for (std::size_t c = 0; c < ncols_elim; ++c) {
        std::size_t p = c;
        while (p < z.rows && z.at(p, c) == 0) ++p;
        if (p == z.rows) {
            if (pivot_fail) *pivot_fail = c;
            return 0;
        }
        if (p != c) {
            z.swap_rows(p, c);
            sign = -sign;
        }
        const mpz_class& piv = z.at(c, c);
        for (std::size_t i = c + 1; i < z.rows; ++i) {
            if (z.at(i, c) == 0) {
                // Row already reduced in this column; still must be rescaled
                // to keep the Bareiss invariant for later exact divisions.
                for (std::size_t j = c + 1; j < z.cols; ++j) {
                    t1 = piv * z.at(i, j);
                    mpz_divexact(z.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = c + 1; j < z.cols; ++j) {
                t1 = piv * z.at(i, j);
                t2 = z.at(i, c) * z.at(c, j);
                t1 -= t2;
                mpz_divexact(z.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            z.at(i, c) = 0;
        }
        prev = piv;
    }
    return sign;
}

}  // namespace

template <>
Rational det_exact<Rational>(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    ZMat z(n, n);
    const std::vector<mpz_class> scale = clear_rows(m, nullptr, z);
    const int sign = bareiss_forward(z, n - 1, nullptr);
    if (sign == 0) return Rational(0);
    // After eliminating the first n-1 columns the bottom-right entry is the
    // determinant of the integer matrix.
    mpz_class det_z = z.at(n - 1, n - 1);
    if (sign < 0) det_z = -det_z;
    mpz_class denom(1);
    for (const mpz_class& d : scale) denom *= d;
    return Rational(det_z, denom);
}

template <>
Matrix<Rational> solve_linear_exact_multi<Rational>(const Matrix<Rational>& a,
                                                    const Matrix<Rational>& b) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError("linear solve requires a square matrix");
    if (b.rows() != a.rows())
        throw DimensionMismatchError("right-hand side row count mismatch");
    const std::size_t n = a.rows(), k = b.cols();
    if (n == 0) return Matrix<Rational>(0, k);

    ZMat z(n, n + k);
    clear_rows(a, &b, z);
    std::size_t bad_col = 0;
    if (bareiss_forward(z, n, &bad_col) == 0)
        throw SingularMatrixError("singular system in exact solve");

    // Back-substitution over the rationals on the integer triangular system.
    Matrix<Rational> x(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(Rational(z.at(ii, n + c), mpz_class(1)));
            for (std::size_t j = ii + 1; j < n; ++j)
                acc -= Rational(z.at(ii, j), mpz_class(1)) * x.at(j, c);
            x.at(ii, c) = acc / Rational(z.at(ii, ii), mpz_class(1));
        }
    }
    detail::check_residual(a, x, b);
    return x;
}

}  // namespace zhualg
