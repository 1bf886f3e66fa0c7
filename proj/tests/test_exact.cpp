#include <random>
#include <vector>

#include "doctest.h"
#include "zhualg/cyclotomic.hpp"
#include "zhualg/errors.hpp"
#include "zhualg/matrix.hpp"
#include "zhualg/rational.hpp"

using namespace zhualg;

namespace {

Rational rand_rat(std::mt19937_64& rng, long nb = 10, long db = 7) {
    std::uniform_int_distribution<long> num(-nb, nb);
    std::uniform_int_distribution<long> den(1, db);
    return Rational(num(rng), den(rng));
}

Matrix<Rational> rand_mat(std::mt19937_64& rng, std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_rat(rng);
    return m;
}

// Cofactor expansion along the first row; the slow reference determinant.
Rational det_cofactor(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        const Rational term = m.at(0, c) * det_cofactor(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational::from_string("15/8") == Rational(15, 8));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational::from_string("x/y"), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
}

TEST_CASE("rational field operations") {
    const Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK(a - a == Rational(0));
    CHECK((a / a) == Rational(1));
    CHECK(Rational(7, 2).is_integer() == false);
    CHECK(Rational(14, 2).is_integer());
    CHECK(Rational(14, 2).to_long() == 7);
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(binom_general(Rational(7, 3), 0) == Rational(1));
    CHECK(binom_general(Rational(5, 2), 2) == Rational(15, 8));
    CHECK(binom_general(Rational(-1, 2), 3) == Rational(-5, 16));
}

TEST_CASE("binomial Pascal identity at rational arguments") {
    std::mt19937_64 rng(7001);
    for (int it = 0; it < 200; ++it) {
        const Rational x = rand_rat(rng, 20, 9);
        std::uniform_int_distribution<long> jd(0, 12);
        const long j = jd(rng);
        CHECK(binom_general(x, j) + binom_general(x, j + 1) ==
              binom_general(x + Rational(1), j + 1));
    }
}

TEST_CASE("binomial integer specialization") {
    for (long t = 0; t < 9; ++t)
        for (long j = 0; j < 9; ++j) {
            const Rational v = binom_general(Rational(t), j);
            if (t < j) {
                CHECK(v == Rational(0));
            } else {
                long num = 1, den = 1;
                for (long s = 0; s < j; ++s) {
                    num *= t - s;
                    den *= s + 1;
                }
                CHECK(v == Rational(num, den));
            }
        }
}

TEST_CASE("binomial row matches elementwise evaluation") {
    std::mt19937_64 rng(7002);
    for (int it = 0; it < 20; ++it) {
        const Rational q = rand_rat(rng);
        const std::vector<Rational> row = binomial_row(q, 15);
        REQUIRE(row.size() == 16);
        for (long j = 0; j <= 15; ++j) CHECK(row[static_cast<std::size_t>(j)] == binom_general(q, j));
    }
}

TEST_CASE("determinant basic values") {
    CHECK(det_exact(Matrix<Rational>::identity(3)) == Rational(1));
    Matrix<Rational> m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3);
    m.at(1, 1) = Rational(4);
    CHECK(det_exact(m) == Rational(-2));
    CHECK(det_exact(Matrix<Rational>(0, 0)) == Rational(1));
    CHECK_THROWS_AS(det_exact(Matrix<Rational>(2, 3)), DimensionMismatchError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(7003);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int it = 0; it < 6; ++it) {
            const Matrix<Rational> m = rand_mat(rng, n);
            CHECK(det_exact(m) == det_cofactor(m));
        }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(7004);
    for (int it = 0; it < 8; ++it) {
        const Matrix<Rational> a = rand_mat(rng, 4), b = rand_mat(rng, 4);
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("fast rational determinant matches the generic field path") {
    std::mt19937_64 rng(7005);
    for (int it = 0; it < 6; ++it) {
        const Matrix<Rational> m = rand_mat(rng, 4);
        Matrix<Cyclotomic> mc(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) mc.at(i, j) = Cyclotomic(m.at(i, j));
        Rational via_field;
        REQUIRE(det_exact(mc).is_rational(&via_field));
        CHECK(det_exact(m) == via_field);
    }
}

TEST_CASE("linear solve on diagonal and identity systems") {
    Matrix<Rational> d(2, 2);
    d.at(0, 0) = Rational(2);
    d.at(1, 1) = Rational(4);
    const std::vector<Rational> x = solve_linear_exact(d, {Rational(1), Rational(1)});
    CHECK(x[0] == Rational(1, 2));
    CHECK(x[1] == Rational(1, 4));

    const Matrix<Rational> id = Matrix<Rational>::identity(3);
    const std::vector<Rational> b = {Rational(3, 7), Rational(-2), Rational(5, 3)};
    CHECK(solve_linear_exact(id, b) == b);
}

TEST_CASE("linear solve returns the exact solution on random systems") {
    std::mt19937_64 rng(7006);
    int solved = 0;
    while (solved < 10) {
        const Matrix<Rational> a = rand_mat(rng, 5);
        if (det_exact(a).is_zero()) continue;
        ++solved;
        Matrix<Rational> rhs(5, 3);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 3; ++j) rhs.at(i, j) = rand_rat(rng);
        const Matrix<Rational> x = solve_linear_exact_multi(a, rhs);
        CHECK(a * x == rhs);  // residual identically zero
    }
}

TEST_CASE("linear solve distinguishes singular from malformed input") {
    Matrix<Rational> sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(0, 1) = Rational(2);
    sing.at(1, 0) = Rational(2);
    sing.at(1, 1) = Rational(4);
    CHECK_THROWS_AS(solve_linear_exact(sing, {Rational(1), Rational(0)}), SingularMatrixError);
    CHECK_THROWS_AS(solve_linear_exact(Matrix<Rational>(2, 3), {Rational(1), Rational(0)}),
                    DimensionMismatchError);
}

TEST_CASE("rank and nullspace are consistent") {
    std::mt19937_64 rng(7007);
    for (int it = 0; it < 6; ++it) {
        Matrix<Rational> m(4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rand_rat(rng, 3, 2);
        const std::size_t r = rank_exact(m);
        const auto null = nullspace_exact(m);
        CHECK(r + null.size() == 6);
        for (const auto& v : null) {
            for (std::size_t i = 0; i < 4; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < 6; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == Rational(0));
            }
        }
    }
}

TEST_CASE("roots of unity evaluate exactly") {
    CHECK(cyclo_eval(1, 0) == Cyclotomic(1));
    CHECK(cyclo_eval(4, 2) == Cyclotomic(-1));
    CHECK(cyclo_eval(3, 1) * cyclo_eval(3, 2) == Cyclotomic(1));
    CHECK(cyclo_eval(6, 3) == Cyclotomic(-1));
    CHECK(cyclo_eval(5, 7) == cyclo_eval(5, 2));
}

TEST_CASE("roots of unity have exact multiplicative order") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Cyclotomic z = Cyclotomic::zeta(n);
        CHECK(z.pow(static_cast<long>(n)) == Cyclotomic(1));
        for (unsigned k = 1; k < n; ++k) CHECK(z.pow(static_cast<long>(k)) != Cyclotomic(1));
    }
}

TEST_CASE("cyclotomic arithmetic across conductors") {
    // zeta_6 = -zeta_3^2, comparing through the promoted conductor.
    CHECK(Cyclotomic::zeta(6) == Cyclotomic(0) - Cyclotomic::zeta(3).pow(2));
    // 1 + zeta_3 + zeta_3^2 = 0.
    const Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(Cyclotomic(1) + z3 + z3.pow(2) == Cyclotomic(0));
    // Conjugation inverts roots of unity.
    CHECK(Cyclotomic::zeta(8).conj() == Cyclotomic::zeta(8, -1));
}

TEST_CASE("cyclotomic ring laws on random elements") {
    std::mt19937_64 rng(7008);
    std::uniform_int_distribution<int> pick(0, 3);
    auto rand_cyc = [&](unsigned n) {
        Cyclotomic acc;
        for (int t = 0; t < 3; ++t)
            acc = acc + Cyclotomic::zeta(n, pick(rng)) * Cyclotomic(rand_rat(rng, 4, 3));
        return acc;
    };
    for (int it = 0; it < 12; ++it) {
        const Cyclotomic a = rand_cyc(4), b = rand_cyc(6), c = rand_cyc(3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyclotomic(1));
            CHECK(a.pow(-2) == (a.inverse() * a.inverse()));
        }
    }
}

TEST_CASE("exact complex embedding of roots of unity") {
    const auto z = Cyclotomic::zeta(8).to_complex();
    const double isq = 0.7071067811865476;
    CHECK(std::abs(z.real() - isq) < 1e-12);
    CHECK(std::abs(z.imag() - isq) < 1e-12);
}
