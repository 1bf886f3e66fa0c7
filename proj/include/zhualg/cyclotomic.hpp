#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zhualg/rational.hpp"

namespace zhualg {

// Element of the cyclotomic field Q(zeta_n), represented as a polynomial in
// zeta_n reduced modulo the n-th cyclotomic polynomial. The coefficient
// vector always has length phi(n) (degree of the field), so two elements of
// the same field are equal iff their vectors are equal. Mixed-conductor
// arithmetic promotes both operands into Q(zeta_lcm) first.
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    Cyclotomic(int v) : n_(1), c_(1, Rational(v)) {}  // NOLINT: implicit by design
    Cyclotomic(const Rational& v) : n_(1), c_(1, v) {}  // NOLINT

    // zeta_n^k (k may be negative; it is reduced modulo n).
    static Cyclotomic zeta(unsigned n, long k = 1);

    // Element with the given coefficient vector (length <= phi(n); padded).
    static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> coeffs);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when the element lies in Q; stores the value through out if given.
    bool is_rational(Rational* out = nullptr) const;

    // Embeds into Q(zeta_m); m must be a multiple of the conductor.
    Cyclotomic promoted(unsigned m) const;

    Cyclotomic inverse() const;  // throws MathError on zero
    Cyclotomic pow(long e) const;
    Cyclotomic conj() const;  // complex conjugate, zeta -> zeta^{-1}

    std::complex<double> to_complex() const;
    std::string str() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
    friend Cyclotomic operator-(const Cyclotomic& a) { return Cyclotomic(0) - a; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& v);

  private:
    unsigned n_;
    std::vector<Rational> c_;
};

// Coefficients of the n-th cyclotomic polynomial, low degree first, monic,
// length phi(n) + 1. Computed by exact division of x^n - 1 and cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

// zeta_N^k as a field element; the op used by integrations and bindings.
inline Cyclotomic cyclo_eval(unsigned N, long k) { return Cyclotomic::zeta(N, k); }

}  // namespace zhualg
