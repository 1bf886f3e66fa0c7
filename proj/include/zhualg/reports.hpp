#pragma once

#include <cstdint>
#include <string>

namespace zhualg {

// Shared run configuration for the command pipelines.
struct RunConfig {
    std::string sweep;         // range syntax, e.g. "T=1..4,l=0..2"
    std::string fixture_path;  // structure-algebra commands only
    std::string out_path;      // empty: write the report to stdout
    std::uint64_t seed = 12345;
    long trunc = -1;  // working series order; -1 applies K = M + 4l + 40
    int jobs = 1;
    bool bench = false;            // record wall-clock timings in the report
    bool inject_singular = false;  // test hook: corrupt the first system
};

struct RunResult {
    std::string report;  // serialized JSON document
    bool ok = false;     // every mathematical check in the run passed
};

// Correction-vector sweep: lambda multipliers and F vectors per cell.
RunResult run_coeffs(const RunConfig& cfg);

// Unified product sweep: gamma coefficients plus per-residue congruence
// witnesses.
RunResult run_product(const RunConfig& cfg);

// Determinant identity sweep (random points + specialization) and the
// determinant chain of the correction systems; optional benchmark row.
RunResult run_detcheck(const RunConfig& cfg);

// Structure-algebra pipeline for one fixture file: validation, ideals,
// radical, numeric block dimensions, induced modules, commutants.
RunResult run_double(const RunConfig& cfg);

// Writes the report to cfg.out_path (stdout when empty).
void emit_report(const RunConfig& cfg, const std::string& report);

}  // namespace zhualg
