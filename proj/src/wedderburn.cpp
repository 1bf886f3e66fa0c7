#include "zhualg/wedderburn.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

using CMat = Eigen::MatrixXcd;

// Orthonormal basis of the center of the algebra, found as the nullspace of
// the linear system  x * b_j - b_j * x = 0  for all j, over the complex field.
std::vector<Eigen::VectorXcd> center_basis(const StructureAlgebra& alg) {
    const long n = alg.dim();
    CMat sys(n * n, n);
    sys.setZero();
    // Unknown x = sum_i x_i b_i; row (j, k): coefficient of x_i is
    // c_{ij}^k - c_{ji}^k.
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            for (const auto& [k, c] : alg.sc(i, j))
                sys(j * n + k, i) += c.to_complex();
            for (const auto& [k, c] : alg.sc(j, i))
                sys(j * n + k, i) -= c.to_complex();
        }
    }
    Eigen::JacobiSVD<CMat> svd(sys, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-9 * (sv.size() > 0 ? std::max(sv(0), 1.0) : 1.0);
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    std::vector<Eigen::VectorXcd> basis;
    for (long i = rank; i < n; ++i) basis.push_back(svd.matrixV().col(i));
    return basis;
}

}  // namespace

WedderburnResult wedderburn_numeric(const StructureAlgebra& alg, std::uint64_t seed) {
    const long n = alg.dim();
    if (n == 0) return {{}, 0};
    if (radical_dim(alg) != 0)
        throw MathError("algebra has a nonzero radical; block decomposition undefined");

    const std::vector<Eigen::VectorXcd> center = center_basis(alg);
    const long z = static_cast<long>(center.size());
    if (z == 0) throw MathError("semisimple algebra with empty center");

    // Left-regular representation of the basis, as dense complex matrices.
    std::vector<CMat> lreg(static_cast<std::size_t>(n), CMat::Zero(n, n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (const auto& [k, c] : alg.sc(i, j))
                lreg[static_cast<std::size_t>(i)](k, j) += c.to_complex();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    constexpr int kMaxRetries = 8;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        // Random central element; its left-regular matrix is diagonalizable
        // with one eigenvalue per simple block, multiplicity d_i^2.
        CMat L = CMat::Zero(n, n);
        for (long t = 0; t < z; ++t) {
            const std::complex<double> coef(unif(rng), unif(rng));
            for (long i = 0; i < n; ++i)
                L += coef * center[static_cast<std::size_t>(t)](i) *
                     lreg[static_cast<std::size_t>(i)];
        }
        Eigen::ComplexEigenSolver<CMat> es(L, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success) continue;
        std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                             es.eigenvalues().data() + n);
        std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        double scale = 0.0;
        for (const auto& v : ev) scale = std::max(scale, std::abs(v));
        const double gap = 1e-6 * std::max(scale, 1.0);

        std::vector<long> mult;
        bool ambiguous = false;
        long run = 1;
        for (long i = 1; i <= n; ++i) {
            if (i < n && std::abs(ev[static_cast<std::size_t>(i)] -
                                  ev[static_cast<std::size_t>(i - 1)]) <= gap) {
                ++run;
                continue;
            }
            // Cluster boundary must be clean: neighbours far apart.
            if (i < n && std::abs(ev[static_cast<std::size_t>(i)] -
                                  ev[static_cast<std::size_t>(i - 1)]) <= 1e3 * gap)
                ambiguous = true;
            mult.push_back(run);
            run = 1;
        }
        if (ambiguous) continue;
        if (static_cast<long>(mult.size()) != z) continue;  // accidental collision

        std::vector<long> dims;
        bool square_ok = true;
        long total = 0;
        for (long m : mult) {
            const long d = std::lround(std::sqrt(static_cast<double>(m)));
            if (d * d != m) {
                square_ok = false;
                break;
            }
            dims.push_back(d);
            total += m;
        }
        if (!square_ok || total != n) continue;
        std::sort(dims.begin(), dims.end());
        return {dims, attempt};
    }
    throw SpectralError("eigenvalue clustering stayed degenerate across retries");
}

}  // namespace zhualg
