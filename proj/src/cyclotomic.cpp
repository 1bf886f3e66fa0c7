#include "zhualg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

// Dense univariate polynomials over Q, low degree first, trailing zeros trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw MathError("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        const Rational f = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly mod(Poly a, const Poly& m) { return divmod(std::move(a), m).second; }

Poly scale(Poly p, const Rational& s) {
    for (Rational& c : p) c *= s;
    trim(p);
    return p;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Extended Euclid: returns (g, u) with u*a + v*m = g, g the monic gcd.
// Only the cofactor of a is needed (inverse modulo m).
std::pair<Poly, Poly> ext_gcd_cofactor(Poly a, Poly m) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly u0 = {}, u1 = {Rational(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) throw MathError("gcd of zero polynomials");
    const Rational lead = r0.back();
    return {scale(std::move(r0), Rational(1) / lead), scale(std::move(u0), Rational(1) / lead)};
}

std::mutex phi_cache_mutex;

}  // namespace

unsigned euler_phi(unsigned n) {
    if (n == 0) throw InputError("euler_phi(0)");
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw InputError("cyclotomic polynomial of index 0");
    static std::map<unsigned, Poly> cache;
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by all lower-index cyclotomic polynomials Phi_d, d | n.
    Poly p(n + 1, Rational(0));
    p[0] = Rational(-1);
    p[n] = Rational(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto di = cache.find(d);
        Poly phi_d;
        if (di != cache.end()) {
            phi_d = di->second;
        } else {
            Poly q(d + 1, Rational(0));
            q[0] = Rational(-1);
            q[d] = Rational(1);
            for (unsigned e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                q = divmod(q, cache.at(e)).first;  // lower indices filled below first
            }
            phi_d = q;
        }
        // Ensure the cache is populated bottom-up so cache.at(e) above is safe.
        cache.emplace(d, phi_d);
        auto [quot, rem] = divmod(p, phi_d);
        if (!rem.empty()) throw MathError("cyclotomic polynomial division was not exact");
        p = std::move(quot);
    }
    auto [pos, inserted] = cache.emplace(n, std::move(p));
    (void)inserted;
    return pos->second;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k) {
    if (n == 0) throw InputError("zeta with conductor 0");
    long kk = k % static_cast<long>(n);
    if (kk < 0) kk += static_cast<long>(n);
    Poly mono(static_cast<std::size_t>(kk) + 1, Rational(0));
    mono[static_cast<std::size_t>(kk)] = Rational(1);
    return from_coeffs(n, mod(std::move(mono), cyclotomic_polynomial(n)));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned n, std::vector<Rational> coeffs) {
    if (n == 0) throw InputError("cyclotomic element with conductor 0");
    const unsigned deg = euler_phi(n);
    if (coeffs.size() > deg) {
        coeffs = mod(std::move(coeffs), cyclotomic_polynomial(n));
    }
    coeffs.resize(deg, Rational(0));
    Cyclotomic v;
    v.n_ = n;
    v.c_ = std::move(coeffs);
    return v;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational(Rational* out) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    if (out) *out = c_[0];
    return true;
}

Cyclotomic Cyclotomic::promoted(unsigned m) const {
    if (m == n_) return *this;
    if (m == 0 || m % n_ != 0) throw InputError("conductor promotion requires a multiple");
    const unsigned stride = m / n_;
    const Poly& phi_m = cyclotomic_polynomial(m);
    // zeta_n = zeta_m^stride; map coefficient i to the monomial x^(stride*i).
    Poly acc;
    Poly power = {Rational(1)};
    Poly step(stride + 1, Rational(0));
    step[stride] = Rational(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            if (acc.size() < power.size()) acc.resize(power.size(), Rational(0));
            for (std::size_t j = 0; j < power.size(); ++j) acc[j] += c_[i] * power[j];
        }
        if (i + 1 < c_.size()) power = mod(mul(power, step), phi_m);
    }
    trim(acc);
    return from_coeffs(m, std::move(acc));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = lcm_u(a.n_, b.n_);
    const Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
    std::vector<Rational> c = pa.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += pb.c_[i];
    return Cyclotomic::from_coeffs(m, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = lcm_u(a.n_, b.n_);
    const Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
    std::vector<Rational> c = pa.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= pb.c_[i];
    return Cyclotomic::from_coeffs(m, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = lcm_u(a.n_, b.n_);
    const Cyclotomic pa = a.promoted(m), pb = b.promoted(m);
    Poly prod = mod(mul(pa.c_, pb.c_), cyclotomic_polynomial(m));
    return Cyclotomic::from_coeffs(m, std::move(prod));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw MathError("cyclotomic division by zero");
    Rational r;
    if (is_rational(&r)) {
        Cyclotomic v;
        v.n_ = n_;
        v.c_ = c_;
        v.c_[0] = Rational(1) / r;
        return v;
    }
    Poly a = c_;
    trim(a);
    auto [g, u] = ext_gcd_cofactor(a, cyclotomic_polynomial(n_));
    if (g.size() != 1) throw MathError("cyclotomic inverse: gcd not constant");
    // ext_gcd_cofactor returns monic gcd = 1, so u is the inverse directly.
    return from_coeffs(n_, mod(std::move(u), cyclotomic_polynomial(n_)));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc = Cyclotomic(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += Cyclotomic(c_[i]) * zeta(n_, -static_cast<long>(i));
    }
    return acc.promoted(n_);
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * std::acos(-1.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += c_[i].to_double() *
               std::polar(1.0, tau * static_cast<double>(i) / static_cast<double>(n_));
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = lcm_u(a.n_, b.n_);
    return a.promoted(m).c_ == b.promoted(m).c_;
}

std::string Cyclotomic::str() const {
    Rational r;
    if (is_rational(&r)) return r.str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& v) { return os << v.str(); }

}  // namespace zhualg
