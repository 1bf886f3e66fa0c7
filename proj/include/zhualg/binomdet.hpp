#pragma once

#include <vector>

#include "zhualg/matrix.hpp"
#include "zhualg/rational.hpp"

namespace zhualg {

// Evaluation instance of the block binomial matrix A(a, b, t; x): t column
// blocks of width b, rows shifting the binomial's lower index by one.
struct DetInstance {
    long a = 1;
    long b = 1;
    long t = 1;
    std::vector<Rational> x;  // length t
};

void validate_instance(const DetInstance& inst);

// The bt x bt matrix with entry C(x_i, a + c + rho) at row rho (0-based),
// block i (1-based), column-in-block c (0-based).
Matrix<Rational> build_A(const DetInstance& inst);

// The closed-form product
//   H(x) = prod_i [ prod_{j=1}^{b-1} (x_i+j)^{b-j} * prod_{j=0}^{a-1} (x_i-j)^b
//                   * prod_{j=1}^{b-1} (x_i-a+1-j)^{b-j} ]
//          * prod_{i<j} prod_{k=-b+1}^{b-1} (x_i - x_j + k)^{b-|k|}.
Rational H_eval(const DetInstance& inst);

// det A = (-1)^{bt(bt-1)/2} H(x) / H at the anti-diagonal specialization.
Rational det_closed_form(const DetInstance& inst);

// The specialization point (a+tb-1, a+(t-1)b-1, ..., a+b-1) where A becomes
// anti-diagonal with unit entries.
std::vector<Rational> specialization_point(long a, long b, long t);

// Total degree of H in (x_1, ..., x_t): (a-1)bt + b^2 t(t+1)/2.
long h_degree(long a, long b, long t);

struct IdentityReport {
    DetInstance inst;
    Rational det;
    Rational closed_form;
    bool pass = false;
};

// Exact comparison det_exact(build_A(inst)) == det_closed_form(inst).
IdentityReport verify_identity(const DetInstance& inst);

}  // namespace zhualg
