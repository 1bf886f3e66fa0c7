#include "zhualg/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

constexpr long kExhaustiveLimit = 24;  // full triple checks up to this order

std::string triple_str(long a, long b, long c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

}  // namespace

GroupReport validate_group(FiniteGroup& g, unsigned long seed) {
    GroupReport rep;
    const long n = g.order;
    if (n < 1) {
        rep.failures.push_back("order must be positive");
        return rep;
    }
    if (g.table.size() != static_cast<std::size_t>(n)) {
        rep.failures.push_back("Cayley table row count != order");
        return rep;
    }
    for (const auto& row : g.table)
        if (row.size() != static_cast<std::size_t>(n)) {
            rep.failures.push_back("Cayley table is not square");
            return rep;
        }

    rep.closure_ok = true;
    for (long a = 0; a < n && rep.closure_ok; ++a)
        for (long b = 0; b < n; ++b) {
            const long ab = g.mul(a, b);
            if (ab < 0 || ab >= n) {
                rep.failures.push_back("closure violated at " + triple_str(a, b, ab));
                rep.closure_ok = false;
                break;
            }
        }
    if (!rep.closure_ok) return rep;

    g.identity = -1;
    for (long e = 0; e < n; ++e) {
        bool is_id = true;
        for (long a = 0; a < n; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) {
                is_id = false;
                break;
            }
        if (is_id) {
            g.identity = e;
            break;
        }
    }
    rep.identity_ok = g.identity >= 0;
    if (!rep.identity_ok) {
        rep.failures.push_back("no two-sided identity element");
        return rep;
    }

    g.inverse.assign(static_cast<std::size_t>(n), -1);
    rep.inverse_ok = true;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverse[static_cast<std::size_t>(a)] = b;
                break;
            }
        if (g.inverse[static_cast<std::size_t>(a)] < 0) {
            rep.failures.push_back("element " + std::to_string(a) + " has no inverse");
            rep.inverse_ok = false;
        }
    }
    if (!rep.inverse_ok) return rep;

    rep.assoc_ok = true;
    auto check_triple = [&](long a, long b, long c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            if (rep.assoc_ok)
                rep.failures.push_back("associativity fails at " + triple_str(a, b, c));
            rep.assoc_ok = false;
        }
    };
    if (n <= kExhaustiveLimit) {
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> pick(0, n - 1);
        for (int k = 0; k < 20000; ++k) check_triple(pick(rng), pick(rng), pick(rng));
    }

    rep.ok = rep.closure_ok && rep.identity_ok && rep.inverse_ok && rep.assoc_ok;
    return rep;
}

void finalize_group(FiniteGroup& g) {
    const GroupReport rep = validate_group(g);
    if (!rep.ok)
        throw MathError("group validation failed: " +
                        (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
}

ActionReport validate_action(const FiniteGroup& g, const RightActionSet& s) {
    ActionReport rep;
    const long n = g.order;
    const long np = s.size();
    if (g.identity < 0) {
        rep.failures.push_back("group must be validated before the action");
        return rep;
    }
    if (np == 0) {
        rep.failures.push_back("action set has no points");
        return rep;
    }
    if (s.action.size() != static_cast<std::size_t>(np)) {
        rep.failures.push_back("action table row count != number of points");
        return rep;
    }
    for (const auto& row : s.action)
        if (row.size() != static_cast<std::size_t>(n)) {
            rep.failures.push_back("action table row width != group order");
            return rep;
        }
    for (long p = 0; p < np; ++p) {
        if (s.points[static_cast<std::size_t>(p)].g < 0 ||
            s.points[static_cast<std::size_t>(p)].g >= n) {
            rep.failures.push_back("point " + std::to_string(p) + " has an invalid group label");
            return rep;
        }
        for (long a = 0; a < n; ++a) {
            const long pa = s.act(p, a);
            if (pa < 0 || pa >= np) {
                rep.failures.push_back("action leaves the point set at (" + std::to_string(p) +
                                       ", " + std::to_string(a) + ")");
                return rep;
            }
        }
    }

    bool ok = true;
    for (long p = 0; p < np && ok; ++p) {
        if (s.act(p, g.identity) != p) {
            rep.failures.push_back("identity does not fix point " + std::to_string(p));
            ok = false;
            break;
        }
        for (long a = 0; a < n && ok; ++a) {
            // Label twist: g(p.a) = a^{-1} g(p) a.
            const long expected = g.mul(g.mul(g.inv(a), s.points[static_cast<std::size_t>(p)].g), a);
            if (s.points[static_cast<std::size_t>(s.act(p, a))].g != expected) {
                rep.failures.push_back("label twist fails at point " + std::to_string(p) +
                                       ", element " + std::to_string(a));
                ok = false;
                break;
            }
            for (long b = 0; b < n; ++b) {
                if (s.act(s.act(p, a), b) != s.act(p, g.mul(a, b))) {
                    rep.failures.push_back("action is not compatible at point " +
                                           std::to_string(p) + ", " + triple_str(a, b, -1));
                    ok = false;
                    break;
                }
            }
        }
    }
    rep.ok = ok;
    return rep;
}

OrbitData orbits_and_stabilizers(const FiniteGroup& g, const RightActionSet& s) {
    if (g.identity < 0) throw InputError("group must be validated before orbit analysis");
    const long n = g.order;
    const long np = s.size();
    OrbitData out;
    out.orbit_of.assign(static_cast<std::size_t>(np), -1);
    out.stabilizer.resize(static_cast<std::size_t>(np));
    out.coset_reps.resize(static_cast<std::size_t>(np));

    // Element order with the identity first, so coset representative g_1 = 1.
    std::vector<long> elems;
    elems.reserve(static_cast<std::size_t>(n));
    elems.push_back(g.identity);
    for (long a = 0; a < n; ++a)
        if (a != g.identity) elems.push_back(a);

    for (long p = 0; p < np; ++p) {
        for (long a : elems) {
            if (s.act(p, a) == p) out.stabilizer[static_cast<std::size_t>(p)].push_back(a);
        }
        std::sort(out.stabilizer[static_cast<std::size_t>(p)].begin(),
                  out.stabilizer[static_cast<std::size_t>(p)].end());
        std::vector<long> seen;
        for (long a : elems) {
            const long pa = s.act(p, a);
            if (std::find(seen.begin(), seen.end(), pa) == seen.end()) {
                seen.push_back(pa);
                out.coset_reps[static_cast<std::size_t>(p)].push_back(a);
            }
        }
        const long orbit_size = static_cast<long>(seen.size());
        const long stab_size =
            static_cast<long>(out.stabilizer[static_cast<std::size_t>(p)].size());
        if (orbit_size * stab_size != n)
            throw MathError("orbit-stabilizer count fails at point " + std::to_string(p));
        // Twist-compatibility forces the stabilizer into the centralizer of
        // the point's group label; confirm it.
        const long gp = s.points[static_cast<std::size_t>(p)].g;
        for (long a : out.stabilizer[static_cast<std::size_t>(p)])
            if (g.mul(a, gp) != g.mul(gp, a))
                throw MathError("stabilizer escapes the centralizer at point " +
                                std::to_string(p));
    }

    for (long p = 0; p < np; ++p) {
        if (out.orbit_of[static_cast<std::size_t>(p)] >= 0) continue;
        const long idx = static_cast<long>(out.orbits.size());
        std::vector<long> orbit;
        for (long a : elems) {
            const long pa = s.act(p, a);
            if (out.orbit_of[static_cast<std::size_t>(pa)] < 0) {
                out.orbit_of[static_cast<std::size_t>(pa)] = idx;
                orbit.push_back(pa);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

CocycleTable::CocycleTable(long npoints, long order, unsigned conductor)
    : npoints_(npoints),
      order_(order),
      conductor_(conductor),
      v_(static_cast<std::size_t>(npoints * order * order), Cyclotomic(1)) {
    if (npoints < 1 || order < 1 || conductor < 1)
        throw InputError("cocycle table needs positive dimensions and conductor");
}

const Cyclotomic& CocycleTable::at(long p, long a, long b) const {
    if (p < 0 || p >= npoints_ || a < 0 || a >= order_ || b < 0 || b >= order_)
        throw InputError("cocycle index out of range");
    return v_[static_cast<std::size_t>((p * order_ + a) * order_ + b)];
}

void CocycleTable::set(long p, long a, long b, Cyclotomic v) {
    if (p < 0 || p >= npoints_ || a < 0 || a >= order_ || b < 0 || b >= order_)
        throw InputError("cocycle index out of range");
    v_[static_cast<std::size_t>((p * order_ + a) * order_ + b)] = std::move(v);
}

CocycleReport validate_cocycle(const FiniteGroup& g, const RightActionSet& s,
                               const CocycleTable& alpha) {
    CocycleReport rep;
    if (g.identity < 0) {
        rep.failures.push_back("group must be validated before the cocycle");
        return rep;
    }
    if (alpha.npoints() != s.size() || alpha.order() != g.order) {
        rep.failures.push_back("cocycle table dimensions do not match group/action");
        return rep;
    }
    const long n = g.order;
    const long np = s.size();

    rep.normalized = true;
    for (long p = 0; p < np; ++p)
        if (!(alpha.at(p, g.identity, g.identity) == Cyclotomic(1))) rep.normalized = false;

    for (long p = 0; p < np; ++p)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                if (alpha.at(p, a, b).is_zero()) {
                    rep.failures.push_back("cocycle value is zero at (" + std::to_string(p) +
                                           ", " + std::to_string(a) + ", " + std::to_string(b) +
                                           ")");
                    return rep;
                }

    for (long p = 0; p < np; ++p) {
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < n; ++c) {
                    // (alpha(a,b) . c) alpha(ab,c) = alpha(a,bc) alpha(b,c),
                    // read off at the basis point p.
                    const long p_shift = s.act(p, g.inv(c));
                    const Cyclotomic lhs =
                        alpha.at(p_shift, a, b) * alpha.at(p, g.mul(a, b), c);
                    const Cyclotomic rhs =
                        alpha.at(p, a, g.mul(b, c)) * alpha.at(p, b, c);
                    if (!(lhs == rhs)) {
                        rep.failures.push_back("cocycle identity fails at point " +
                                               std::to_string(p) + ", triple " +
                                               triple_str(a, b, c));
                        return rep;
                    }
                }
    }
    rep.ok = true;
    return rep;
}

}  // namespace zhualg
