#include "zhualg/zhu.hpp"

#include <algorithm>
#include <string>

#include "zhualg/errors.hpp"

namespace zhualg {

void validate_twist(const TwistParams& p) {
    if (p.T < 1) throw InputError("twist order T must be >= 1");
    if (p.l < 0) throw InputError("grading parameter l must be >= 0");
    if (p.i < 0 || p.i > p.T - 1)
        throw InputError("fractional part i must satisfy 0 <= i <= T-1");
}

void validate_weights(const TwistParams& p, const WeightContext& w) {
    validate_twist(p);
    if (w.M < w.wt_u + w.wt_v - 1)
        throw InputError("truncation mode M must be >= wt_u + wt_v - 1");
    if (w.wt_u + p.l < 0) throw InputError("wt_u + l must be >= 0");
}

long delta_fn(long i, long r, long T) {
    if (T < 1) throw InputError("delta_fn needs T >= 1");
    if (r < 0 || r > T) throw InputError("delta_fn residue out of range [0, T]");
    if (r == T) return 1;
    return i >= r ? 1 : 0;
}

std::vector<Rational> q_values(const TwistParams& p, long wt_u) {
    validate_twist(p);
    if (wt_u + p.l < 0) throw InputError("wt_u + l must be >= 0");
    std::vector<Rational> Q;
    Q.reserve(static_cast<std::size_t>(p.T));
    for (long r = 0; r < p.T; ++r)
        Q.push_back(Rational(wt_u - 1 + delta_fn(p.i, r, p.T) + p.l) + Rational(r, p.T));
    return Q;
}

Rational alpha_skm(const std::vector<Rational>& Q, long s, long k, long m) {
    if (s < 0 || static_cast<std::size_t>(s) >= Q.size())
        throw InputError("alpha_skm residue out of range");
    if (k < 0) throw InputError("alpha_skm needs k >= 0");
    if (m < 1) throw InputError("alpha_skm needs m >= 1");
    const std::vector<Rational> pos = binomial_row(Q[static_cast<std::size_t>(s)], k);
    const std::vector<Rational> neg = binomial_row(-Q[static_cast<std::size_t>(s)], k + m);
    Rational acc(0);
    for (long j = 0; j <= k; ++j)
        acc += pos[static_cast<std::size_t>(j)] * neg[static_cast<std::size_t>(k + m - j)];
    return acc;
}

namespace {

struct IndexSet {
    std::vector<std::pair<long, long>> entries;  // (s, k)
    long q = 0;
    long q0 = 0;      // number of (0, k) columns
    long kmax = 0;    // M - q, the top k of the s >= 1 blocks (may be < 0)
};

IndexSet make_index_set(const TwistParams& p, const WeightContext& w, long pmode) {
    validate_weights(p, w);
    IndexSet S;
    S.q = std::min(pmode, -2 * p.l - 1);
    S.q0 = w.wt_u + p.l;
    S.kmax = w.M - S.q;
    for (long k = 0; k < S.q0; ++k) S.entries.emplace_back(0, k);
    for (long s = 1; s < p.T; ++s)
        for (long k = 0; k <= S.kmax; ++k) S.entries.emplace_back(s, k);
    return S;
}

// Partial convolutions alpha^{s,k}_m for one residue s, arranged so each A1
// entry costs O(1): pc[k][n] = sum_{j=0}^{k} C(Q_s, j) C(-Q_s, n-j), and
// alpha^{s,k}_m = pc[k][k+m].
std::vector<std::vector<Rational>> alpha_table(const Rational& Qs, long kmax, long mmax) {
    const long nmax = kmax + mmax;
    const std::vector<Rational> pos = binomial_row(Qs, kmax);
    const std::vector<Rational> neg = binomial_row(-Qs, nmax);
    std::vector<std::vector<Rational>> pc(
        static_cast<std::size_t>(kmax) + 1,
        std::vector<Rational>(static_cast<std::size_t>(nmax) + 1, Rational(0)));
    for (long n = 0; n <= nmax; ++n) pc[0][static_cast<std::size_t>(n)] = neg[static_cast<std::size_t>(n)];
    for (long k = 1; k <= kmax; ++k)
        for (long n = 0; n <= nmax; ++n) {
            Rational v = pc[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
            if (n - k >= 0)
                v += pos[static_cast<std::size_t>(k)] * neg[static_cast<std::size_t>(n - k)];
            pc[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = v;
        }
    return pc;
}

Matrix<Rational> build_a1(const std::vector<Rational>& Q, const IndexSet& S) {
    const std::size_t n = S.entries.size();
    Matrix<Rational> a1(n, n);
    const long mmax = static_cast<long>(n);
    long col = 0;
    long current_s = -1;
    std::vector<std::vector<Rational>> pc;
    for (const auto& [s, k] : S.entries) {
        if (s != current_s) {
            const long block_kmax = (s == 0) ? std::max(S.q0 - 1, 0L) : std::max(S.kmax, 0L);
            pc = alpha_table(Q[static_cast<std::size_t>(s)], block_kmax, mmax);
            current_s = s;
        }
        for (long m = 1; m <= mmax; ++m)
            a1.at(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(col)) =
                pc[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + m)];
        ++col;
    }
    return a1;
}

}  // namespace

SystemMatrices build_system(const TwistParams& p, const WeightContext& w, long pmode) {
    const IndexSet S = make_index_set(p, w, pmode);
    const std::vector<Rational> Q = q_values(p, w.wt_u);
    const std::size_t n = S.entries.size();
    const long mmax = static_cast<long>(n);

    SystemMatrices out;
    out.S_index = S.entries;
    out.q = S.q;
    out.A1 = build_a1(Q, S);

    out.A2 = Matrix<Rational>(n, n);
    {
        long col = 0;
        long current_s = -1;
        std::vector<Rational> neg;
        for (const auto& [s, k] : S.entries) {
            if (s != current_s) {
                const long block_kmax = (s == 0) ? std::max(S.q0 - 1, 0L) : std::max(S.kmax, 0L);
                neg = binomial_row(-Q[static_cast<std::size_t>(s)], block_kmax + mmax);
                current_s = s;
            }
            for (long m = 1; m <= mmax; ++m)
                out.A2.at(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(col)) =
                    neg[static_cast<std::size_t>(k + m)];
            ++col;
        }
    }

    const long n3 = static_cast<long>(n) - S.q0;  // = (T-1)(M-q+1)
    out.A3 = Matrix<Rational>(static_cast<std::size_t>(n3), static_cast<std::size_t>(n3));
    {
        long col = 0;
        long current_s = -1;
        std::vector<Rational> row_s;
        const Rational Q0(S.q0);
        for (const auto& [s, k] : S.entries) {
            if (s == 0) continue;
            if (s != current_s) {
                row_s = binomial_row(Q0 - Q[static_cast<std::size_t>(s)],
                                     S.q0 + std::max(S.kmax, 0L) + n3);
                current_s = s;
            }
            for (long m = 1; m <= n3; ++m)
                out.A3.at(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(col)) =
                    row_s[static_cast<std::size_t>(S.q0 + k + m)];
            ++col;
        }
    }
    return out;
}

FSolution solve_F_detailed(const TwistParams& p, const WeightContext& w, long r, long pmode) {
    const IndexSet S = make_index_set(p, w, pmode);
    const std::vector<Rational> Q = q_values(p, w.wt_u);
    const long rr = ((r % p.T) + p.T) % p.T;
    const std::size_t n = S.entries.size();

    FSolution sol;
    sol.q = S.q;
    sol.lambda.assign(n, Rational(0));

    if (n > 0) {
        Matrix<Rational> target(n, 1);
        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto& [s, k] = S.entries[idx];
            const bool hit = (S.q + k == pmode) && ((rr != 0 && s == rr) || (rr == 0 && s != 0));
            if (hit) target.at(idx, 0) = Rational(1);
        }
        const Matrix<Rational> a1t = build_a1(Q, S).transposed();
        const Matrix<Rational> lam = solve_linear_exact_multi(a1t, target);
        for (std::size_t m = 0; m < n; ++m) sol.lambda[m] = lam.at(m, 0);
    }

    auto add = [&](long mode, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = sol.F.emplace(mode, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) sol.F.erase(it);
        }
    };
    if (rr == 0) {
        add(pmode, Rational(1));
        for (std::size_t m = 1; m <= n; ++m) add(S.q - static_cast<long>(m), -sol.lambda[m - 1]);
    } else {
        for (std::size_t m = 1; m <= n; ++m) add(S.q - static_cast<long>(m), sol.lambda[m - 1]);
    }
    return sol;
}

ModeVector solve_F(const TwistParams& p, const WeightContext& w, long r, long pmode) {
    return solve_F_detailed(p, w, r, pmode).F;
}

std::vector<Rational> unified_c_weights(long l, long wt_u, long M) {
    if (l < 0) throw InputError("unified weights need l >= 0");
    if (wt_u + l < 0) throw InputError("wt_u + l must be >= 0");
    const long kmax = M + 2 * l + 1;
    std::vector<Rational> c;
    if (kmax < 0) return c;
    const std::vector<Rational> top = binomial_row(Rational(wt_u + l), kmax);
    std::vector<Rational> middle;  // C(2l - j, l) for j = 0..l
    middle.reserve(static_cast<std::size_t>(l) + 1);
    for (long j = 0; j <= l; ++j) middle.push_back(binom_general(Rational(2 * l - j), l));
    c.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) {
        Rational acc(0);
        for (long j = 0; j <= std::min(k, l); ++j) {
            const Rational term = middle[static_cast<std::size_t>(j)] *
                                  top[static_cast<std::size_t>(k - j)];
            acc += ((l - j) % 2 == 0) ? term : -term;
        }
        c.push_back(acc);
    }
    return c;
}

ModeVector unified_product_coeffs(const TwistParams& p, const WeightContext& w) {
    const long pmode0 = -2 * p.l - 1;
    const IndexSet S = make_index_set(p, w, pmode0);  // q = -2l-1 for all k >= 0
    const std::vector<Rational> Q = q_values(p, w.wt_u);
    const std::vector<Rational> c = unified_c_weights(p.l, w.wt_u, w.M);
    const std::size_t n = S.entries.size();
    const std::size_t nk = c.size();

    ModeVector gamma;
    auto add = [&](long mode, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = gamma.emplace(mode, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) gamma.erase(it);
        }
    };

    // The unit part of each F^{0, -2l-1+k}.
    for (std::size_t k = 0; k < nk; ++k) add(pmode0 + static_cast<long>(k), c[k]);

    if (n > 0 && nk > 0) {
        // All corrections share the same matrix; solve every target at once.
        Matrix<Rational> targets(n, nk);
        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto& [s, k_col] = S.entries[idx];
            if (s == 0) continue;
            const long k = S.q + k_col - pmode0;  // q + k_col == pmode0 + k
            if (k >= 0 && static_cast<std::size_t>(k) < nk)
                targets.at(idx, static_cast<std::size_t>(k)) = Rational(1);
        }
        const Matrix<Rational> a1t = build_a1(Q, S).transposed();
        const Matrix<Rational> lam = solve_linear_exact_multi(a1t, targets);
        for (std::size_t k = 0; k < nk; ++k) {
            if (c[k].is_zero()) continue;
            for (std::size_t m = 1; m <= n; ++m)
                add(S.q - static_cast<long>(m), -(c[k] * lam.at(m - 1, k)));
        }
    }
    return gamma;
}

ModeVector classical_star_coeffs(long l, long wt_u, long M) {
    if (l < 0) throw InputError("classical product needs l >= 0");
    if (wt_u + l < 0) throw InputError("wt_u + l must be >= 0");
    ModeVector out;
    const std::vector<Rational> top = binomial_row(Rational(wt_u + l),
                                                   std::max(wt_u + 3 * l + 1, 0L));
    for (long d = -2 * l - 1; d <= std::min(M, wt_u - 1); ++d) {
        Rational acc(0);
        for (long m = 0; m <= l; ++m) {
            const long idx = d + l + m + 1;
            if (idx < 0 || idx > wt_u + l) continue;  // binomial vanishes outside
            const Rational term = binom_general(Rational(m + l), l) *
                                  top[static_cast<std::size_t>(idx)];
            acc += (m % 2 == 0) ? term : -term;
        }
        if (!acc.is_zero()) out.emplace(d, acc);
    }
    return out;
}

ModeVector circle_generator_coeffs(const TwistParams& p, long wt_u, long r, long k, long m,
                                   long M) {
    validate_twist(p);
    if (wt_u + p.l < 0) throw InputError("wt_u + l must be >= 0");
    if (k < 0 || m < 0 || k > m) throw InputError("generator coefficients need 0 <= k <= m");
    const long rr = ((r % p.T) + p.T) % p.T;
    const std::vector<Rational> Q = q_values(p, wt_u);
    const long e = 2 * p.l + delta_fn(p.i, rr, p.T) + delta_fn(p.i, p.T - rr, p.T) + m;
    const Rational expo = Q[static_cast<std::size_t>(rr)] + Rational(k);
    ModeVector out;
    const long jmax = M + e;  // highest j with mode j - e <= M
    if (jmax < 0) return out;
    const std::vector<Rational> row = binomial_row(expo, jmax);
    for (long j = 0; j <= jmax; ++j) {
        const Rational& v = row[static_cast<std::size_t>(j)];
        if (!v.is_zero()) out.emplace(j - e, v);
    }
    return out;
}

TruncSeries mode_vector_series(const ModeVector& v) {
    return TruncSeries::from_terms(v, TruncSeries::kInfOrder);
}

CongruenceReport verify_product_congruence(const TwistParams& p, const WeightContext& w, long K) {
    validate_weights(p, w);
    if (K < w.M + 4 * p.l + 40)
        throw TruncationError("verify_product_congruence needs K >= M + 4l + 40");
    const std::vector<Rational> Q = q_values(p, w.wt_u);
    const ModeVector gamma = unified_product_coeffs(p, w);
    const ModeVector classical = classical_star_coeffs(p.l, w.wt_u, w.M);

    CongruenceReport rep;
    rep.pass = true;
    for (long r = 0; r < p.T; ++r) {
        ModeVector d = gamma;
        if (r == 0) {
            for (const auto& [mode, v] : classical) {
                auto [it, fresh] = d.emplace(mode, -v);
                if (!fresh) {
                    it->second -= v;
                    if (it->second.is_zero()) d.erase(it);
                }
            }
        }
        const MembershipReport mem =
            o_membership(mode_vector_series(d), Q[static_cast<std::size_t>(r)], p.l, w.M, K);
        ResidueWitness wit;
        wit.r = r;
        wit.member = mem.member;
        wit.witness_low = mem.witness_low;
        wit.residual_support = mem.residual_support;
        rep.residues.push_back(std::move(wit));
        if (!mem.member) rep.pass = false;
    }
    return rep;
}

}  // namespace zhualg
