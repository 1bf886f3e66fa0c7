#include "zhualg/series.hpp"

#include <algorithm>

#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

// Saturating sum of truncation orders / degrees (either side may be the
// kInfOrder sentinel).
long sat_add(long a, long b) {
    if (a >= TruncSeries::kInfOrder || b >= TruncSeries::kInfOrder)
        return TruncSeries::kInfOrder;
    return a + b;
}

}  // namespace

void TruncSeries::set(long deg, Rational v) {
    if (v.is_zero())
        c_.erase(deg);
    else
        c_[deg] = std::move(v);
}

TruncSeries TruncSeries::monomial(long deg, const Rational& c, long trunc) {
    if (deg > trunc) throw TruncationError("monomial degree beyond truncation order");
    TruncSeries s(trunc);
    s.set(deg, c);
    return s;
}

TruncSeries TruncSeries::from_terms(const std::map<long, Rational>& terms, long trunc) {
    TruncSeries s(trunc);
    for (const auto& [deg, v] : terms) {
        if (deg > trunc) throw TruncationError("term degree beyond truncation order");
        s.set(deg, v);
    }
    return s;
}

Rational TruncSeries::coeff(long d) const {
    if (d > trunc_)
        throw TruncationError("coefficient at degree " + std::to_string(d) +
                              " beyond truncation order " + std::to_string(trunc_));
    auto it = c_.find(d);
    return it == c_.end() ? Rational(0) : it->second;
}

std::vector<long> TruncSeries::support() const {
    std::vector<long> s;
    s.reserve(c_.size());
    for (const auto& [deg, v] : c_) s.push_back(deg);
    return s;
}

TruncSeries TruncSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_)
        throw TruncationError("cannot extend truncation order without recomputing");
    TruncSeries s(new_trunc);
    for (const auto& [deg, v] : c_) {
        if (deg > new_trunc) break;
        s.c_.emplace(deg, v);
    }
    return s;
}

TruncSeries TruncSeries::shifted(long k) const {
    TruncSeries s(sat_add(trunc_, k));
    for (const auto& [deg, v] : c_) s.c_.emplace(deg + k, v);
    return s;
}

TruncSeries TruncSeries::scaled(const Rational& f) const {
    TruncSeries s(trunc_);
    if (f.is_zero()) return s;
    for (const auto& [deg, v] : c_) s.c_.emplace(deg, v * f);
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.trunc_, b.trunc_));
    for (const auto& [deg, v] : a.c_)
        if (deg <= s.trunc_) s.c_.emplace(deg, v);
    for (const auto& [deg, v] : b.c_) {
        if (deg > s.trunc_) continue;
        auto [it, fresh] = s.c_.emplace(deg, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) s.c_.erase(it);
        }
    }
    return s;
}

TruncSeries operator-(const TruncSeries& a) {
    TruncSeries s(a.trunc_);
    for (const auto& [deg, v] : a.c_) s.c_.emplace(deg, -v);
    return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    // Unknown coefficients of one factor meet known ones of the other at
    // degree a.trunc + b.min_deg (and symmetrically); everything below both
    // bounds is fully determined.
    const long t = std::min(sat_add(a.trunc_, b.min_deg()), sat_add(b.trunc_, a.min_deg()));
    TruncSeries s(t);
    for (const auto& [da, va] : a.c_) {
        for (const auto& [db, vb] : b.c_) {
            const long d = da + db;
            if (d > t) break;  // b terms ascend
            auto [it, fresh] = s.c_.emplace(d, va * vb);
            if (!fresh) it->second += va * vb;
        }
    }
    for (auto it = s.c_.begin(); it != s.c_.end();) {
        if (it->second.is_zero())
            it = s.c_.erase(it);
        else
            ++it;
    }
    return s;
}

TruncSeries binomial_power(const Rational& q, long K) {
    if (K < 0) throw InputError("binomial_power with negative order");
    const std::vector<Rational> row = binomial_row(q, K);
    std::map<long, Rational> terms;
    for (long j = 0; j <= K; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero())
            terms.emplace(j, row[static_cast<std::size_t>(j)]);
    return TruncSeries::from_terms(terms, K);
}

TruncSeries series_invert(const TruncSeries& s) {
    if (s.min_deg() < 0) throw InputError("series_invert requires no negative-degree terms");
    const long K = std::min(s.trunc(), TruncSeries::kInfOrder);
    if (K < 0) throw TruncationError("series_invert needs the constant term");
    const Rational c0 = s.coeff(0);
    if (c0.is_zero()) throw MathError("series_invert of series with zero constant term");
    if (K >= TruncSeries::kInfOrder)
        throw InputError("series_invert needs a finite truncation order");

    std::vector<Rational> b(static_cast<std::size_t>(K) + 1, Rational(0));
    const Rational c0_inv = Rational(1) / c0;
    b[0] = c0_inv;
    for (long n = 1; n <= K; ++n) {
        Rational acc(0);
        // Only stored (nonzero) coefficients of s contribute.
        for (const auto& [k, ck] : s.terms()) {
            if (k <= 0) continue;
            if (k > n) break;
            acc += ck * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = -(acc * c0_inv);
    }
    std::map<long, Rational> terms;
    for (long n = 0; n <= K; ++n)
        if (!b[static_cast<std::size_t>(n)].is_zero())
            terms.emplace(n, b[static_cast<std::size_t>(n)]);
    return TruncSeries::from_terms(terms, K);
}

std::pair<TruncSeries, TruncSeries> split_at(const TruncSeries& s, long m) {
    // Low part: every degree >= m is exactly zero, so if the cut lies within
    // the known range the low part is a fully known Laurent polynomial.
    const long low_trunc =
        (m - 1 <= s.trunc()) ? TruncSeries::kInfOrder : s.trunc();
    std::map<long, Rational> low, high;
    for (const auto& [deg, v] : s.terms())
        (deg < m ? low : high).emplace(deg, v);
    return {TruncSeries::from_terms(low, low_trunc), TruncSeries::from_terms(high, s.trunc())};
}

MembershipReport o_membership(const TruncSeries& P, const Rational& Qr, long l, long M, long K) {
    if (l < 0) throw InputError("o_membership with negative l");
    if (K < M + 2 * l + 2)
        throw TruncationError("o_membership working order K below M + 2l + 2");
    if (P.trunc() != TruncSeries::kInfOrder && P.trunc() < M)
        throw TruncationError("input series not known through degree M");

    MembershipReport rep;
    rep.checked_to = M;
    if (P.is_zero()) {
        rep.member = true;
        rep.witness_low = TruncSeries::zero(TruncSeries::kInfOrder);
        return rep;
    }

    const long min_p = P.min_deg();
    // Order for (1+x)^{Q_r}: high enough that h = P/(1+x)^{Q_r} is known
    // through max(-2l-2, M) and the reconstructed residual through M.
    const long base = std::max({K, M, -2 * l - 2, 0L});
    const long Kf = base - std::min(0L, min_p) + 2;

    const TruncSeries f = binomial_power(Qr, Kf);
    const TruncSeries h = P * series_invert(f);
    if (h.trunc() < -2 * l - 2)
        throw TruncationError("insufficient working order for the principal part");

    auto [h_low, h_high] = split_at(h, -2 * l - 1);
    const TruncSeries residual = P - h_low * f;
    if (residual.trunc() < M)
        throw TruncationError("insufficient working order for the residual window");

    rep.witness_low = h_low;
    rep.checked_to = std::min(residual.trunc(), K);
    // Degrees above M belong to the allowed tail; only the checked window
    // counts against membership.
    for (long d : residual.support())
        if (d <= M) rep.residual_support.push_back(d);
    rep.member = rep.residual_support.empty();
    return rep;
}

}  // namespace zhualg
