#pragma once

#include <string>
#include <vector>

#include "zhualg/cyclotomic.hpp"

namespace zhualg {

// Finite group presented by its Cayley table. Element 0..order-1;
// table[a][b] is the product ab. identity/inverse are filled by
// validate_group (or finalize_group) once the axioms are confirmed.
struct FiniteGroup {
    long order = 0;
    std::vector<std::vector<long>> table;
    long identity = -1;
    std::vector<long> inverse;

    long mul(long a, long b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    long inv(long a) const { return inverse[static_cast<std::size_t>(a)]; }
};

struct GroupReport {
    bool ok = false;
    bool closure_ok = false;
    bool identity_ok = false;
    bool inverse_ok = false;
    bool assoc_ok = false;
    std::vector<std::string> failures;
};

// Checks closure, identity, inverses, and associativity (every triple for
// |G| <= 24, seeded random triples beyond). Fills identity/inverse in g on
// success.
GroupReport validate_group(FiniteGroup& g, unsigned long seed = 1);

// validate_group that throws MathError instead of reporting.
void finalize_group(FiniteGroup& g);

// Labeled point of the right G-set: a group element index plus a module id.
struct ActionPoint {
    long g = 0;
    std::string m;
};

// Finite right G-set with twist-compatible labels: action[p][a] is the index
// of p . a, and the group label transforms by conjugation.
struct RightActionSet {
    std::vector<ActionPoint> points;
    std::vector<std::vector<long>> action;

    long size() const { return static_cast<long>(points.size()); }
    long act(long p, long a) const { return action[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)]; }
};

struct ActionReport {
    bool ok = false;
    std::vector<std::string> failures;
};

// Checks well-formedness, p.1 = p, (p.a).b = p.(ab), and the label rule
// g(p.a) = a^{-1} g(p) a.
ActionReport validate_action(const FiniteGroup& g, const RightActionSet& s);

struct OrbitData {
    std::vector<std::vector<long>> orbits;       // point indices per orbit
    std::vector<long> orbit_of;                  // point -> orbit index
    std::vector<std::vector<long>> stabilizer;   // point -> sorted subgroup
    std::vector<std::vector<long>> coset_reps;   // point -> reps g_j, g_1 = 1,
                                                 // with p . g_j enumerating the orbit
};

// Orbits and stabilizers of the right action. Asserts that each stabilizer
// centralizes the point's group label and that |orbit| * |stabilizer| = |G|.
OrbitData orbits_and_stabilizers(const FiniteGroup& g, const RightActionSet& s);

// Cocycle values alpha_p(a, b) in a cyclotomic field, stored densely.
class CocycleTable {
  public:
    CocycleTable() = default;
    CocycleTable(long npoints, long order, unsigned conductor);

    static CocycleTable trivial(long npoints, long order) {
        return CocycleTable(npoints, order, 1);
    }

    long npoints() const { return npoints_; }
    long order() const { return order_; }
    unsigned conductor() const { return conductor_; }

    const Cyclotomic& at(long p, long a, long b) const;
    void set(long p, long a, long b, Cyclotomic v);

  private:
    long npoints_ = 0, order_ = 0;
    unsigned conductor_ = 1;
    std::vector<Cyclotomic> v_;
};

struct CocycleReport {
    bool ok = false;
    bool normalized = false;  // alpha_p(1, 1) = 1 for all p
    std::vector<std::string> failures;
};

// Checks that all values are nonzero and that the componentwise cocycle
// identity alpha_{p.c^{-1}}(a,b) alpha_p(ab,c) = alpha_p(a,bc) alpha_p(b,c)
// holds for every point and triple.
CocycleReport validate_cocycle(const FiniteGroup& g, const RightActionSet& s,
                               const CocycleTable& alpha);

}  // namespace zhualg
