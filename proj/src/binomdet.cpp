#include "zhualg/binomdet.hpp"

#include <cstdlib>

#include "zhualg/errors.hpp"

namespace zhualg {

void validate_instance(const DetInstance& inst) {
    if (inst.a < 1 || inst.b < 1 || inst.t < 1)
        throw InputError("determinant instance needs a, b, t >= 1");
    if (inst.x.size() != static_cast<std::size_t>(inst.t))
        throw InputError("determinant instance needs exactly t evaluation values");
}

Matrix<Rational> build_A(const DetInstance& inst) {
    validate_instance(inst);
    const std::size_t n = static_cast<std::size_t>(inst.b * inst.t);
    Matrix<Rational> A(n, n);
    for (long i = 0; i < inst.t; ++i) {
        // One binomial row per block serves every (c, rho) pair.
        const std::vector<Rational> row =
            binomial_row(inst.x[static_cast<std::size_t>(i)],
                         inst.a + (inst.b - 1) + (static_cast<long>(n) - 1));
        for (long c = 0; c < inst.b; ++c)
            for (long rho = 0; rho < static_cast<long>(n); ++rho)
                A.at(static_cast<std::size_t>(rho),
                     static_cast<std::size_t>(i * inst.b + c)) =
                    row[static_cast<std::size_t>(inst.a + c + rho)];
    }
    return A;
}

namespace {

Rational pow_rational(const Rational& base, long e) {
    Rational acc(1);
    for (long k = 0; k < e; ++k) acc *= base;
    return acc;
}

}  // namespace

Rational H_eval(const DetInstance& inst) {
    validate_instance(inst);
    Rational H(1);
    for (long i = 0; i < inst.t; ++i) {
        const Rational& xi = inst.x[static_cast<std::size_t>(i)];
        for (long j = 1; j <= inst.b - 1; ++j)
            H *= pow_rational(xi + Rational(j), inst.b - j);
        for (long j = 0; j <= inst.a - 1; ++j)
            H *= pow_rational(xi - Rational(j), inst.b);
        for (long j = 1; j <= inst.b - 1; ++j)
            H *= pow_rational(xi - Rational(inst.a - 1) - Rational(j), inst.b - j);
    }
    for (long i = 0; i < inst.t; ++i)
        for (long j = i + 1; j < inst.t; ++j)
            for (long k = -(inst.b - 1); k <= inst.b - 1; ++k)
                H *= pow_rational(inst.x[static_cast<std::size_t>(i)] -
                                      inst.x[static_cast<std::size_t>(j)] + Rational(k),
                                  inst.b - std::labs(k));
    return H;
}

std::vector<Rational> specialization_point(long a, long b, long t) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(t));
    for (long i = 1; i <= t; ++i) x.emplace_back(a + (t - i + 1) * b - 1);
    return x;
}

long h_degree(long a, long b, long t) { return (a - 1) * b * t + b * b * t * (t + 1) / 2; }

Rational det_closed_form(const DetInstance& inst) {
    validate_instance(inst);
    DetInstance ref = inst;
    ref.x = specialization_point(inst.a, inst.b, inst.t);
    const Rational denom = H_eval(ref);
    const long n = inst.b * inst.t;
    const bool neg = ((n * (n - 1) / 2) % 2) != 0;
    const Rational ratio = H_eval(inst) / denom;
    return neg ? -ratio : ratio;
}

IdentityReport verify_identity(const DetInstance& inst) {
    IdentityReport rep;
    rep.inst = inst;
    rep.det = det_exact(build_A(inst));
    rep.closed_form = det_closed_form(inst);
    rep.pass = (rep.det == rep.closed_form);
    return rep;
}

}  // namespace zhualg
