#include "zhualg/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw InputError("sweep: bad integer \"" + s + "\"");
    }
    if (used != s.size()) throw InputError("sweep: bad integer \"" + s + "\"");
    return v;
}

SweepRange parse_range(const std::string& s) {
    const std::size_t dots = s.find("..");
    SweepRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_long(s);
    } else {
        r.lo = parse_long(s.substr(0, dots));
        r.hi = parse_long(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw InputError("sweep: empty range \"" + s + "\"");
    return r;
}

}  // namespace

SweepSpec parse_sweep(const std::string& text) {
    SweepSpec spec;
    if (text.empty()) return spec;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("sweep: expected var=range, got \"" + item + "\"");
        const std::string var = item.substr(0, eq);
        const SweepRange r = parse_range(item.substr(eq + 1));
        if (var == "T")
            spec.T = r;
        else if (var == "l")
            spec.l = r;
        else if (var == "i")
            spec.i = r;
        else if (var == "wu")
            spec.wu = r;
        else if (var == "wv")
            spec.wv = r;
        else if (var == "dM")
            spec.dM = r;
        else if (var == "dp")
            spec.dp = r;
        else
            throw InputError("sweep: unknown variable \"" + var + "\"");
    }
    if (spec.T.lo < 1) throw InputError("sweep: T must be at least 1");
    if (spec.l.lo < 0) throw InputError("sweep: l must be nonnegative");
    if (spec.wu.lo < 0 || spec.wv.lo < 0)
        throw InputError("sweep: weights must be nonnegative");
    return spec;
}

std::vector<SweepCell> enumerate_cells(const SweepSpec& spec) {
    std::vector<SweepCell> cells;
    for (long T = spec.T.lo; T <= spec.T.hi; ++T) {
        long ilo = 0, ihi = T - 1;
        if (spec.i.hi >= spec.i.lo) {
            ilo = std::max(ilo, spec.i.lo);
            ihi = std::min(ihi, spec.i.hi);
        }
        for (long l = spec.l.lo; l <= spec.l.hi; ++l)
            for (long i = ilo; i <= ihi; ++i)
                for (long wu = spec.wu.lo; wu <= spec.wu.hi; ++wu)
                    for (long wv = spec.wv.lo; wv <= spec.wv.hi; ++wv)
                        for (long dM = spec.dM.lo; dM <= spec.dM.hi; ++dM)
                            for (long dp = spec.dp.lo; dp <= spec.dp.hi; ++dp) {
                                SweepCell cell;
                                cell.p = TwistParams{T, l, i};
                                cell.w = WeightContext{wu, wv, wu + wv - 1 + dM};
                                cell.pmode = -2 * l - 1 + dp;
                                cells.push_back(cell);
                            }
    }
    return cells;
}

}  // namespace zhualg
