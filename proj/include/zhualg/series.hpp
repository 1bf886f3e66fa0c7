#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "zhualg/rational.hpp"

namespace zhualg {

// Truncated Laurent series over Q with a finite principal part. Coefficients
// are stored sparsely for degrees up to and including trunc(); degrees beyond
// trunc() are unknown, and any operation that would need them throws
// TruncationError instead of returning wrong data. Truncation orders combine
// pessimistically through arithmetic (min under addition, shifted mins under
// multiplication), so results are never claimed beyond what is actually known.
class TruncSeries {
  public:
    // Truncation order of a fully known Laurent polynomial.
    static constexpr long kInfOrder = std::numeric_limits<long>::max() / 4;

    TruncSeries() : trunc_(0) {}

    static TruncSeries zero(long trunc) { return TruncSeries(trunc); }

    static TruncSeries monomial(long deg, const Rational& c, long trunc);

    // Series from explicit terms. All degrees must be <= trunc; pass
    // kInfOrder for an exact Laurent polynomial.
    static TruncSeries from_terms(const std::map<long, Rational>& terms, long trunc);

    long trunc() const { return trunc_; }

    // Smallest degree with a (possibly) nonzero coefficient: the lowest
    // stored term, or trunc()+1 when all known coefficients vanish.
    long min_deg() const { return c_.empty() ? trunc_ + 1 : c_.begin()->first; }

    // Coefficient at degree d; throws TruncationError for d > trunc().
    Rational coeff(long d) const;

    const std::map<long, Rational>& terms() const { return c_; }
    std::vector<long> support() const;
    bool is_zero() const { return c_.empty(); }

    TruncSeries truncated(long new_trunc) const;  // tighten only
    TruncSeries shifted(long k) const;            // multiply by x^k
    TruncSeries scaled(const Rational& s) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a);

    // Equal truncation order and identical known coefficients.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  private:
    explicit TruncSeries(long trunc) : trunc_(trunc) {}
    void set(long deg, Rational v);

    std::map<long, Rational> c_;
    long trunc_;
};

// (1 + x)^q expanded to order K: sum of C(q, j) x^j for j = 0..K.
TruncSeries binomial_power(const Rational& q, long K);

// Multiplicative inverse of a series with nonzero constant term and no
// negative-degree terms, to the truncation order of the input.
TruncSeries series_invert(const TruncSeries& s);

// Splits s into (terms of degree < m, terms of degree >= m). The low part is
// promoted to a fully known polynomial when m - 1 <= s.trunc(); the high part
// keeps the truncation order of s.
std::pair<TruncSeries, TruncSeries> split_at(const TruncSeries& s, long m);

// Decision report for membership of P in the principal-part ideal
// x^(-2l-2) Q[x^{-1}] (1+x)^{Q_r}, checked through coefficients up to M and
// computed with working order K.
struct MembershipReport {
    bool member = false;
    TruncSeries witness_low;             // h_low with P = h_low (1+x)^{Q_r} + residual
    std::vector<long> residual_support;  // violating degrees <= M; empty iff member
    long checked_to = 0;                 // residual known through this degree
};

// P must be a fully known Laurent polynomial (trunc = kInfOrder) or known at
// least through degree M. Requires K >= M + 2l + 2.
MembershipReport o_membership(const TruncSeries& P, const Rational& Qr, long l, long M, long K);

}  // namespace zhualg
