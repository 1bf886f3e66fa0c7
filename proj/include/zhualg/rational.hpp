#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zhualg/errors.hpp"

namespace zhualg {

// Arbitrary-precision rational number. Canonical form is maintained at all
// times: numerator and denominator coprime, denominator positive, zero stored
// as 0/1. Backed by GMP's mpq layer.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}    // NOLINT: implicit by design, mirrors integer literals
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "num/den" or a bare integer "num". Throws InputError on anything else.
    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return ::sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return ::sgn(v_) < 0; }
    int sign() const { return ::sgn(v_); }

    // Value as long; requires an integer that fits. Throws InputError otherwise.
    long to_long() const;

    double to_double() const { return v_.get_d(); }

    // Always renders as "num/den", e.g. "-5/16", "0/1", "3/1".
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

// Generalized binomial coefficient C(q, j) = q(q-1)...(q-j+1) / j! for
// rational q and non-negative integer j. C(q, 0) = 1.
Rational binom_general(const Rational& q, long j);

// Row of generalized binomials [C(q,0), C(q,1), ..., C(q,max_j)], computed
// incrementally. Cheaper than repeated binom_general calls.
std::vector<Rational> binomial_row(const Rational& q, long max_j);

}  // namespace zhualg
