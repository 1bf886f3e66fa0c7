#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zhualg/matrix.hpp"
#include "zhualg/rational.hpp"
#include "zhualg/series.hpp"

namespace zhualg {

// Twist data: a cyclic twist of order T with grading parameter n = l + i/T.
struct TwistParams {
    long T = 1;  // twist order, >= 1
    long l = 0;  // integer part of the grading parameter, >= 0
    long i = 0;  // fractional numerator, 0 <= i <= T-1
};

// Weight data for a product u * v truncated at mode M.
struct WeightContext {
    long wt_u = 0;
    long wt_v = 0;
    long M = -1;  // must satisfy M >= wt_u + wt_v - 1
};

void validate_twist(const TwistParams& p);
void validate_weights(const TwistParams& p, const WeightContext& w);

// Step indicator: 1 iff i >= r, with the boundary convention delta_i(T) = 1.
// Requires 0 <= r <= T.
long delta_fn(long i, long r, long T);

// Exponents Q_r = wt_u - 1 + delta_i(r) + l + r/T for r = 0..T-1.
// Q_0 = wt_u + l always; requires wt_u + l >= 0.
std::vector<Rational> q_values(const TwistParams& p, long wt_u);

// alpha^{s,k}_m = sum_{j=0}^{k} C(Q_s, j) C(-Q_s, k+m-j).
Rational alpha_skm(const std::vector<Rational>& Q, long s, long k, long m);

// Finitely supported coefficient vector indexed by mode.
using ModeVector = std::map<long, Rational>;

// The linear systems behind the correction terms: A1 and A2 are |S| x |S|
// over the index set S = {(0,k): k < Q_0} u {(s,k): 1 <= s <= T-1, k <= M-q},
// A3 is the trailing (|S|-Q_0)-square block used by the determinant chain.
struct SystemMatrices {
    Matrix<Rational> A1, A2, A3;
    std::vector<std::pair<long, long>> S_index;  // column order (s, k)
    long q = 0;                                  // min(pmode, -2l-1)
};

SystemMatrices build_system(const TwistParams& p, const WeightContext& w, long pmode);

// Correction vector F^{r,p} together with the solved multipliers lambda_{q-m}
// (lambda[m-1] is the coefficient of the unit vector at mode q-m).
struct FSolution {
    ModeVector F;
    std::vector<Rational> lambda;
    long q = 0;
};

FSolution solve_F_detailed(const TwistParams& p, const WeightContext& w, long r, long pmode);
ModeVector solve_F(const TwistParams& p, const WeightContext& w, long r, long pmode);

// Weights c_k of the unified product: c_k = sum_{j=0}^{min(k,l)} (-1)^{l-j}
// C(2l-j, l) C(wt_u+l, k-j), for k = 0..M+2l+1.
std::vector<Rational> unified_c_weights(long l, long wt_u, long M);

// Coefficients gamma_j of the unified product u *_n v =
// sum_k c_k F^{0, -2l-1+k}, all corrections solved off one factorization.
ModeVector unified_product_coeffs(const TwistParams& p, const WeightContext& w);

// Coefficients of the classical (untwisted-component) product: mode d carries
// sum_{m=0}^{l} (-1)^m C(m+l, l) C(wt_u+l, d+l+m+1), truncated to modes <= M.
ModeVector classical_star_coeffs(long l, long wt_u, long M);

// Generator coefficients of the relation space: mode j - (2l + delta_i(r) +
// delta_i(T-r) + m) carries C(Q_r + k, j), truncated to modes <= M.
// Requires 0 <= k <= m.
ModeVector circle_generator_coeffs(const TwistParams& p, long wt_u, long r, long k, long m,
                                   long M);

// Per-residue witness of the congruence gamma = classical mod the relation
// space: the difference must divide down to a principal part h_low.
struct ResidueWitness {
    long r = 0;
    bool member = false;
    TruncSeries witness_low;
    std::vector<long> residual_support;
};

struct CongruenceReport {
    bool pass = false;
    std::vector<ResidueWitness> residues;
};

// Checks, residue by residue, that the unified coefficients agree with the
// classical product modulo the relation space plus modes above M, working to
// series order K (required: K >= M + 4l + 40).
CongruenceReport verify_product_congruence(const TwistParams& p, const WeightContext& w, long K);

// A ModeVector as an exact Laurent polynomial.
TruncSeries mode_vector_series(const ModeVector& v);

}  // namespace zhualg
