#include "zhualg/twisted_double.hpp"

#include <algorithm>
#include <string>

#include "zhualg/errors.hpp"

namespace zhualg {

TwistedDouble TwistedDouble::build(FiniteGroup g, RightActionSet s, CocycleTable alpha) {
    TwistedDouble td;
    {
        const GroupReport rep = validate_group(g);
        if (!rep.ok)
            throw MathError("group axioms fail: " +
                            (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
    }
    if (s.size() < 1) throw InputError("action set must contain at least one point");
    {
        const ActionReport rep = validate_action(g, s);
        if (!rep.ok)
            throw MathError("action axioms fail: " +
                            (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
    }
    if (alpha.npoints() != s.size() || alpha.order() != g.order)
        throw InputError("cocycle table dimensions do not match group and action set");
    {
        const CocycleReport rep = validate_cocycle(g, s, alpha);
        if (!rep.ok)
            throw MathError("cocycle identity fails: " +
                            (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
    }

    const long n = g.order;
    const long np = s.size();
    StructureAlgebra alg(n * np);
    for (long a = 0; a < n; ++a)
        for (long p = 0; p < np; ++p)
            alg.labels()[static_cast<std::size_t>(a * np + p)] =
                "g" + std::to_string(a) + "*e" + std::to_string(p);

    for (long a = 0; a < n; ++a)
        for (long p = 0; p < np; ++p)
            for (long b = 0; b < n; ++b)
                for (long pp = 0; pp < np; ++pp) {
                    if (s.act(p, b) != pp) continue;  // product vanishes
                    StructureAlgebra::TermList terms;
                    terms.emplace_back(g.mul(a, b) * np + pp, alpha.at(pp, a, b));
                    alg.set_sc(a * np + p, b * np + pp, std::move(terms));
                }

    StructureAlgebra::Element e = alg.zero();
    for (long p = 0; p < np; ++p)
        e[static_cast<std::size_t>(g.identity * np + p)] = Cyclotomic(1);
    alg.set_identity(std::move(e));

    const AlgebraReport rep = check_algebra(alg);
    if (!rep.associative)
        throw MathError("twisted double is not associative: " + rep.failures.front());
    if (!rep.unital)
        throw MathError("twisted double identity fails (cocycle not normalized?): " +
                        (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));

    td.orbits_ = orbits_and_stabilizers(g, s);
    td.g_ = std::move(g);
    td.s_ = std::move(s);
    td.alpha_ = std::move(alpha);
    td.alg_ = std::move(alg);
    return td;
}

StructureAlgebra build_double(FiniteGroup g, RightActionSet s, CocycleTable alpha) {
    return TwistedDouble::build(std::move(g), std::move(s), std::move(alpha)).algebra();
}

TwistedDouble::SubIdealData TwistedDouble::sub_and_ideals(long p) const {
    if (p < 0 || p >= s_.size()) throw InputError("point index out of range");
    SubIdealData out;
    out.stabilizer = orbits_.stabilizer[static_cast<std::size_t>(p)];
    const long hs = static_cast<long>(out.stabilizer.size());
    const long np = s_.size();

    // Twisted group algebra of the stabilizer at p.
    std::vector<long> pos_of(static_cast<std::size_t>(g_.order), -1);
    for (long idx = 0; idx < hs; ++idx)
        pos_of[static_cast<std::size_t>(out.stabilizer[static_cast<std::size_t>(idx)])] = idx;
    out.S_p = StructureAlgebra(hs);
    for (long idx = 0; idx < hs; ++idx)
        out.S_p.labels()[static_cast<std::size_t>(idx)] =
            "h" + std::to_string(out.stabilizer[static_cast<std::size_t>(idx)]);
    for (long x = 0; x < hs; ++x)
        for (long y = 0; y < hs; ++y) {
            const long hx = out.stabilizer[static_cast<std::size_t>(x)];
            const long hy = out.stabilizer[static_cast<std::size_t>(y)];
            const long prod = g_.mul(hx, hy);
            const long pos = pos_of[static_cast<std::size_t>(prod)];
            if (pos < 0) throw MathError("stabilizer is not closed under the product");
            StructureAlgebra::TermList terms;
            terms.emplace_back(pos, alpha_.at(p, hx, hy));
            out.S_p.set_sc(x, y, std::move(terms));
        }
    {
        StructureAlgebra::Element e = out.S_p.zero();
        const long id_pos = pos_of[static_cast<std::size_t>(g_.identity)];
        if (id_pos < 0) throw MathError("stabilizer does not contain the identity");
        e[static_cast<std::size_t>(id_pos)] = Cyclotomic(1);
        out.S_p.set_identity(std::move(e));
        const AlgebraReport rep = check_algebra(out.S_p);
        if (!rep.associative || !rep.unital)
            throw MathError("stabilizer group algebra fails: " + rep.failures.front());
    }

    for (long a = 0; a < g_.order; ++a) out.Dp_basis.push_back(index_of(a, p));

    const long orb = orbits_.orbit_of[static_cast<std::size_t>(p)];
    const std::vector<long>& orbit = orbits_.orbits[static_cast<std::size_t>(orb)];
    for (long a = 0; a < g_.order; ++a)
        for (long q : orbit) out.Dorbit_basis.push_back(index_of(a, q));
    std::sort(out.Dorbit_basis.begin(), out.Dorbit_basis.end());

    // Left-ideal check for D(p): products x * d stay inside span{(a, p)}.
    for (long x = 0; x < alg_.dim(); ++x)
        for (long d : out.Dp_basis)
            for (const auto& [k, c] : alg_.sc(x, d)) {
                (void)c;
                if (point_of(k) != p)
                    throw MathError("D(p) fails left-ideal closure at point " + std::to_string(p));
            }

    // Two-sided check for D(orbit).
    std::vector<bool> in_orbit(static_cast<std::size_t>(np), false);
    for (long q : orbit) in_orbit[static_cast<std::size_t>(q)] = true;
    for (long x = 0; x < alg_.dim(); ++x)
        for (long d : out.Dorbit_basis) {
            for (const auto& [k, c] : alg_.sc(x, d)) {
                (void)c;
                if (!in_orbit[static_cast<std::size_t>(point_of(k))])
                    throw MathError("D(orbit) fails left closure");
            }
            for (const auto& [k, c] : alg_.sc(d, x)) {
                (void)c;
                if (!in_orbit[static_cast<std::size_t>(point_of(k))])
                    throw MathError("D(orbit) fails right closure");
            }
        }

    // D(orbit) as an algebra in its own right.
    const long nd = static_cast<long>(out.Dorbit_basis.size());
    if (nd != g_.order * static_cast<long>(orbit.size()))
        throw MathError("D(orbit) has unexpected dimension");
    std::vector<long> local_of(static_cast<std::size_t>(alg_.dim()), -1);
    for (long ldx = 0; ldx < nd; ++ldx)
        local_of[static_cast<std::size_t>(out.Dorbit_basis[static_cast<std::size_t>(ldx)])] = ldx;
    out.dorbit_to_parent = out.Dorbit_basis;
    out.D_orbit = StructureAlgebra(nd);
    for (long x = 0; x < nd; ++x) {
        out.D_orbit.labels()[static_cast<std::size_t>(x)] =
            alg_.labels()[static_cast<std::size_t>(out.Dorbit_basis[static_cast<std::size_t>(x)])];
        for (long y = 0; y < nd; ++y) {
            StructureAlgebra::TermList terms;
            for (const auto& [k, c] : alg_.sc(out.Dorbit_basis[static_cast<std::size_t>(x)],
                                               out.Dorbit_basis[static_cast<std::size_t>(y)])) {
                const long lk = local_of[static_cast<std::size_t>(k)];
                if (lk < 0) throw MathError("D(orbit) product escapes the ideal");
                terms.emplace_back(lk, c);
            }
            out.D_orbit.set_sc(x, y, std::move(terms));
        }
    }
    {
        StructureAlgebra::Element e = out.D_orbit.zero();
        for (long q : orbit)
            e[static_cast<std::size_t>(local_of[static_cast<std::size_t>(
                index_of(g_.identity, q))])] = Cyclotomic(1);
        out.D_orbit.set_identity(std::move(e));
        const AlgebraReport rep = check_algebra(out.D_orbit);
        if (!rep.associative || !rep.unital)
            throw MathError("D(orbit) algebra fails: " + rep.failures.front());
    }
    return out;
}

AlgebraMod TwistedDouble::induce(long p, const AlgebraMod& w) const {
    SubIdealData sub = sub_and_ideals(p);
    const long hs = static_cast<long>(sub.stabilizer.size());
    if (w.algebra.dim() != hs)
        throw InputError("module is not over the stabilizer algebra of the chosen point");
    {
        const ModuleReport rep = check_module(w);
        if (!rep.ok)
            throw MathError("input module fails its axioms: " +
                            (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
    }

    std::vector<long> pos_of(static_cast<std::size_t>(g_.order), -1);
    for (long idx = 0; idx < hs; ++idx)
        pos_of[static_cast<std::size_t>(sub.stabilizer[static_cast<std::size_t>(idx)])] = idx;

    const std::vector<long>& reps = orbits_.coset_reps[static_cast<std::size_t>(p)];
    const long k = static_cast<long>(reps.size());
    const long dw = w.dim_w;
    const long nd = sub.D_orbit.dim();
    const long dim_ind = k * dw;

    // Column block of each orbit point: j with p . g_j = that point.
    std::vector<long> block_of_point(static_cast<std::size_t>(s_.size()), -1);
    for (long j = 0; j < k; ++j)
        block_of_point[static_cast<std::size_t>(s_.act(p, reps[static_cast<std::size_t>(j)]))] = j;

    AlgebraMod ind;
    ind.algebra = sub.D_orbit;
    ind.dim_w = dim_ind;
    ind.action.assign(static_cast<std::size_t>(nd),
                      Matrix<Cyclotomic>(static_cast<std::size_t>(dim_ind),
                                         static_cast<std::size_t>(dim_ind)));

    for (long ldx = 0; ldx < nd; ++ldx) {
        const long parent = sub.dorbit_to_parent[static_cast<std::size_t>(ldx)];
        const long b = elem_of(parent);
        const long pp = point_of(parent);
        const long j0 = block_of_point[static_cast<std::size_t>(pp)];
        if (j0 < 0) throw MathError("orbit point without a coset representative");
        const long u_j0 = g_.inv(reps[static_cast<std::size_t>(j0)]);
        const long c = g_.mul(b, u_j0);
        // Find the target block: c = u_{j'} h' with h' in the stabilizer.
        long j1 = -1, hprime = -1;
        for (long j = 0; j < k; ++j) {
            const long cand = g_.mul(reps[static_cast<std::size_t>(j)], c);
            if (pos_of[static_cast<std::size_t>(cand)] >= 0) {
                j1 = j;
                hprime = cand;
                break;
            }
        }
        if (j1 < 0) throw MathError("coset decomposition failed in induction");
        const long u_j1 = g_.inv(reps[static_cast<std::size_t>(j1)]);
        const Cyclotomic factor =
            alpha_.at(p, b, u_j0) * alpha_.at(p, u_j1, hprime).inverse();
        const Matrix<Cyclotomic>& rho =
            w.action[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(hprime)])];
        Matrix<Cyclotomic>& out = ind.action[static_cast<std::size_t>(ldx)];
        for (long r = 0; r < dw; ++r)
            for (long cc = 0; cc < dw; ++cc)
                out.at(static_cast<std::size_t>(j1 * dw + r),
                       static_cast<std::size_t>(j0 * dw + cc)) =
                    factor * rho.at(static_cast<std::size_t>(r), static_cast<std::size_t>(cc));
    }

    const ModuleReport rep = check_module(ind);
    if (!rep.ok)
        throw MathError("induced module fails its axioms: " +
                        (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
    return ind;
}

}  // namespace zhualg
