#pragma once

#include <string>
#include <vector>

#include "zhualg/zhu.hpp"

namespace zhualg {

// Inclusive integer range.
struct SweepRange {
    long lo = 0;
    long hi = 0;
    bool contains(long v) const { return v >= lo && v <= hi; }
};

// Parameter ranges for a verification sweep.  `i` defaults to the full range
// 0..T-1 of each cell; an explicit range is intersected with that.  `dM` is
// the offset of M above wt_u + wt_v - 1, and `dp` the offset of the probed
// mode above -2l-1 (so the default dp range -2..0 probes -2l-3 .. -2l-1).
struct SweepSpec {
    SweepRange T{1, 4};
    SweepRange l{0, 2};
    SweepRange i{0, -1};  // hi < lo means "all residues of each T"
    SweepRange wu{0, 3};
    SweepRange wv{0, 3};
    SweepRange dM{0, 1};
    SweepRange dp{-2, 0};
};

// Parse "T=1..4,l=0..2,i=0,wu=0..3,wv=0..3,dM=0..1,dp=-2..0"; every field is
// optional and single values stand for one-element ranges.
SweepSpec parse_sweep(const std::string& text);

struct SweepCell {
    TwistParams p;
    WeightContext w;
    long pmode = 0;
};

// All valid cells of the sweep, in deterministic lexicographic order.
std::vector<SweepCell> enumerate_cells(const SweepSpec& spec);

}  // namespace zhualg
