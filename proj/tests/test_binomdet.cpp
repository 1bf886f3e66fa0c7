#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "zhualg/binomdet.hpp"
#include "zhualg/errors.hpp"

using namespace zhualg;

namespace {

DetInstance make(long a, long b, long t, std::vector<Rational> x) {
    return DetInstance{a, b, t, std::move(x)};
}

std::vector<Rational> random_points(std::mt19937_64& rng, long t) {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
    std::vector<Rational> x;
    for (long i = 0; i < t; ++i) x.emplace_back(num(rng), den(rng));
    return x;
}

// Degree of the univariate polynomial lambda -> vals[lambda] via finite
// differences: the D-th difference of a degree-D polynomial is the nonzero
// constant D! * lead, and the (D+1)-st vanishes.
long poly_degree(std::vector<Rational> vals) {
    long d = 0;
    while (true) {
        bool all_zero = true;
        for (const Rational& v : vals) all_zero = all_zero && v.is_zero();
        if (all_zero) return d - 1;
        REQUIRE(vals.size() > 1);  // need headroom to reach the zero row
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) next.push_back(vals[i + 1] - vals[i]);
        vals = std::move(next);
        ++d;
    }
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(validate_instance(make(0, 1, 1, {Rational(1)})), InputError);
    CHECK_THROWS_AS(validate_instance(make(1, 0, 1, {Rational(1)})), InputError);
    CHECK_THROWS_AS(validate_instance(make(1, 1, 0, {Rational(1)})), InputError);
    CHECK_THROWS_AS(validate_instance(make(1, 1, 2, {Rational(1)})), InputError);
    CHECK_NOTHROW(validate_instance(make(1, 1, 1, {Rational(1)})));
}

TEST_CASE("matrix entries are shifted binomials") {
    CHECK(build_A(make(1, 1, 1, {Rational(3)})).at(0, 0) == Rational(3));
    CHECK(build_A(make(3, 1, 1, {Rational(5)})).at(0, 0) == Rational(10));

    const DetInstance inst = make(2, 3, 2, {Rational(7, 2), Rational(-5, 3)});
    const Matrix<Rational> A = build_A(inst);
    REQUIRE(A.rows() == 6);
    for (long i = 0; i < inst.t; ++i)
        for (long c = 0; c < inst.b; ++c)
            for (long rho = 0; rho < 6; ++rho)
                CHECK(A.at(static_cast<std::size_t>(rho),
                           static_cast<std::size_t>(i * inst.b + c)) ==
                      binom_general(inst.x[static_cast<std::size_t>(i)], inst.a + c + rho));
}

TEST_CASE("specialization point flattens the matrix") {
    for (const auto& [a, b, t] : std::vector<std::array<long, 3>>{
             {1, 1, 1}, {2, 2, 2}, {3, 2, 1}, {1, 3, 2}, {2, 1, 3}}) {
        const std::vector<Rational> x = specialization_point(a, b, t);
        REQUIRE(static_cast<long>(x.size()) == t);
        CHECK(x[0] == Rational(a + t * b - 1));
        CHECK(x.back() == Rational(a + b - 1));
        const Matrix<Rational> A = build_A(make(a, b, t, x));
        const std::size_t n = A.rows();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (r + c == n - 1)
                    CHECK(A.at(r, c) == Rational(1));  // unit anti-diagonal
                else if (r + c > n - 1)
                    CHECK(A.at(r, c) == Rational(0));  // zero below it
            }
        const long nl = static_cast<long>(n);
        const Rational sign = ((nl * (nl - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(det_closed_form(make(a, b, t, x)) == sign);
        CHECK(det_exact(A) == sign);
    }
}

TEST_CASE("product form evaluation") {
    CHECK(H_eval(make(2, 1, 1, {Rational(5)})) == Rational(20));
    // A repeated point kills the k = 0 pair factor.
    CHECK(H_eval(make(1, 2, 2, {Rational(9, 4), Rational(9, 4)})) == Rational(0));
    CHECK(!H_eval(make(2, 2, 2, specialization_point(2, 2, 2))).is_zero());
}

TEST_CASE("closed form on single entries") {
    CHECK(det_closed_form(make(3, 1, 1, {Rational(5)})) == Rational(10));
    CHECK(det_closed_form(make(1, 1, 1, {Rational(3)})) == Rational(3));
    // b = t = 1 collapses to one binomial coefficient.
    for (long a = 1; a <= 5; ++a)
        CHECK(det_closed_form(make(a, 1, 1, {Rational(2 * a + 1, 2)})) ==
              binom_general(Rational(2 * a + 1, 2), a));
}

TEST_CASE("determinant identity on random instances") {
    std::mt19937_64 rng(77);
    for (const auto& [a, b, t] : std::vector<std::array<long, 3>>{
             {1, 1, 1}, {2, 2, 2}, {3, 2, 1}, {2, 1, 3}, {1, 3, 2}, {4, 2, 2}}) {
        for (int rep = 0; rep < 25; ++rep) {
            const IdentityReport rep_out = verify_identity(make(a, b, t, random_points(rng, t)));
            CHECK(rep_out.pass);
            CHECK(rep_out.det == rep_out.closed_form);
        }
    }
}

TEST_CASE("vanishing factors force a zero determinant") {
    // Integer point inside [0, a-1]: the whole block of binomials vanishes.
    CHECK(det_exact(build_A(make(3, 3, 1, {Rational(1)}))) == Rational(0));
    CHECK(det_closed_form(make(3, 3, 1, {Rational(1)})) == Rational(0));
    // Negative integer -k with 1 <= k <= b-1.
    CHECK(det_exact(build_A(make(3, 3, 1, {Rational(-2)}))) == Rational(0));
    CHECK(det_closed_form(make(3, 3, 1, {Rational(-2)})) == Rational(0));
    // Two points at integer distance below b: blocks share a column.
    const DetInstance close = make(2, 3, 2, {Rational(15, 2), Rational(11, 2)});
    CHECK(det_exact(build_A(close)) == Rational(0));
    CHECK(det_closed_form(close) == Rational(0));
    // Coincident points.
    const DetInstance twice = make(2, 2, 2, {Rational(1, 3), Rational(1, 3)});
    const IdentityReport rep = verify_identity(twice);
    CHECK(rep.pass);
    CHECK(rep.det == Rational(0));
}

TEST_CASE("in-block column operations by the addition rule preserve the determinant") {
    // Replacing column c of each block by entries C(x_i + min(c, k), a+c+rho)
    // is a product of add-one-column-to-another steps.
    const DetInstance inst = make(2, 3, 2, {Rational(4, 3), Rational(-7, 5)});
    const Rational d0 = det_exact(build_A(inst));
    const long n = inst.b * inst.t;
    for (long k = 0; k <= inst.b; ++k) {
        Matrix<Rational> B(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (long i = 0; i < inst.t; ++i)
            for (long c = 0; c < inst.b; ++c)
                for (long rho = 0; rho < n; ++rho)
                    B.at(static_cast<std::size_t>(rho), static_cast<std::size_t>(i * inst.b + c)) =
                        binom_general(inst.x[static_cast<std::size_t>(i)] +
                                          Rational(std::min(c, k)),
                                      inst.a + c + rho);
        CHECK(det_exact(B) == d0);
    }
}

TEST_CASE("degree of the product form") {
    CHECK(h_degree(1, 1, 1) == 1);
    CHECK(h_degree(3, 1, 1) == 3);
    CHECK(h_degree(2, 2, 2) == 16);
    // Finite-difference oracle along a generic direction: H(lambda * c) is a
    // univariate polynomial whose degree equals the total degree of H.
    for (const auto& [a, b, t] : std::vector<std::array<long, 3>>{{1, 2, 1}, {2, 2, 2}, {3, 1, 2}}) {
        const long D = h_degree(a, b, t);
        const std::vector<long> dir = {3, 7, 11};
        std::vector<Rational> vals;
        for (long lam = 0; lam <= D + 2; ++lam) {
            std::vector<Rational> x;
            for (long i = 0; i < t; ++i) x.emplace_back(lam * dir[static_cast<std::size_t>(i)]);
            vals.push_back(H_eval(make(a, b, t, x)));
        }
        CHECK(poly_degree(std::move(vals)) == D);
    }
}
