#pragma once

#include <string>
#include <vector>

#include "zhualg/group.hpp"
#include "zhualg/structure_algebra.hpp"

namespace zhualg {

// The generalized twisted double A_alpha(G, S): basis (a, p) for a in G and
// p in the stable right G-set S, with product
//   (a, p) (b, p') = alpha_{p'}(a, b) (ab, p')  when p . b = p', else 0,
// and identity sum_p (1, p).
class TwistedDouble {
  public:
    // Validates the group, the action, and the cocycle, builds the algebra,
    // and asserts associativity and unitality. Throws InputError on malformed
    // data and MathError on axiom failures.
    static TwistedDouble build(FiniteGroup g, RightActionSet s, CocycleTable alpha);

    const FiniteGroup& group() const { return g_; }
    const RightActionSet& action_set() const { return s_; }
    const CocycleTable& cocycle() const { return alpha_; }
    const StructureAlgebra& algebra() const { return alg_; }
    const OrbitData& orbits() const { return orbits_; }

    long dim() const { return alg_.dim(); }

    // Basis index of (a, p).
    long index_of(long a, long p) const { return a * s_.size() + p; }
    long elem_of(long idx) const { return idx / s_.size(); }
    long point_of(long idx) const { return idx % s_.size(); }

    struct SubIdealData {
        StructureAlgebra S_p;                 // twisted stabilizer group algebra
        std::vector<long> stabilizer;         // basis order of S_p (group elements)
        std::vector<long> Dp_basis;           // parent indices spanning D(p)
        std::vector<long> Dorbit_basis;       // parent indices spanning D(orbit)
        StructureAlgebra D_orbit;             // D(orbit) as an algebra with identity
        std::vector<long> dorbit_to_parent;   // D_orbit basis -> parent index
    };

    // Stabilizer subalgebra S_p, left ideal D(p), and two-sided ideal
    // D(orbit(p)), each verified by closure checks.
    SubIdealData sub_and_ideals(long p) const;

    // Induced module Ind_{S_p}^{D(orbit)} W on stabilizer coset
    // representatives; W is given over sub_and_ideals(p).S_p. The result is a
    // module over D_orbit (same basis order as SubIdealData), axiom-checked.
    AlgebraMod induce(long p, const AlgebraMod& w) const;

  private:
    FiniteGroup g_;
    RightActionSet s_;
    CocycleTable alpha_;
    StructureAlgebra alg_;
    OrbitData orbits_;
};

// Free-function forms of the main operations.
StructureAlgebra build_double(FiniteGroup g, RightActionSet s, CocycleTable alpha);

}  // namespace zhualg
