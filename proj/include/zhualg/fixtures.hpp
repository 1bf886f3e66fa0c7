#pragma once

#include <map>
#include <string>
#include <vector>

#include "zhualg/group.hpp"
#include "zhualg/structure_algebra.hpp"
#include "zhualg/twisted_double.hpp"

namespace zhualg {

// One module description from a fixture file: matrices for the generators of
// the stabilizer of `point`, keyed by group-element index.
struct FixtureModule {
    long point = 0;
    long dim = 0;
    std::map<long, Matrix<Cyclotomic>> action;
};

struct Fixture {
    FiniteGroup group;
    RightActionSet points;
    CocycleTable cocycle;
    std::vector<FixtureModule> modules;
};

// Parse a fixture from JSON text / from a file on disk.  Schema violations
// (missing keys, wrong shapes, bad indices, unparsable numbers) raise
// FixtureSchemaError; the returned data is *not* yet validated against the
// group/action/cocycle axioms — that is TwistedDouble::build's job.
Fixture parse_fixture(const std::string& json_text);
Fixture load_fixture(const std::string& path);

// Assemble an explicit module over the stabilizer algebra at fm.point from
// the matrices in the fixture.  Every stabilizer element must have a matrix.
AlgebraMod module_from_fixture(const TwistedDouble& td, const FixtureModule& fm);

}  // namespace zhualg
