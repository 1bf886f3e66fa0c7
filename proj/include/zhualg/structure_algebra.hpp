#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zhualg/cyclotomic.hpp"
#include "zhualg/matrix.hpp"

namespace zhualg {

// Finite-dimensional associative algebra over a cyclotomic field given by
// structure constants: basis b_i with b_i b_j = sum_k c_{ij}^k b_k. The
// constant lists are sparse (most products here have at most one term).
class StructureAlgebra {
  public:
    using Element = std::vector<Cyclotomic>;
    using TermList = std::vector<std::pair<long, Cyclotomic>>;

    StructureAlgebra() = default;
    explicit StructureAlgebra(long dim);

    long dim() const { return dim_; }

    std::vector<std::string>& labels() { return labels_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const TermList& sc(long i, long j) const;
    void set_sc(long i, long j, TermList terms);

    Element zero() const { return Element(static_cast<std::size_t>(dim_), Cyclotomic(0)); }
    Element basis(long i) const;

    Element mul(const Element& x, const Element& y) const;

    // Matrix of left multiplication by x in the chosen basis.
    Matrix<Cyclotomic> left_regular(const Element& x) const;
    Matrix<Cyclotomic> left_regular_basis(long i) const;

    const std::optional<Element>& identity() const { return identity_; }
    void set_identity(Element e) { identity_ = std::move(e); }

    // Multiplies two basis elements directly off the structure constants.
    Element mul_basis(long i, long j) const;

  private:
    long dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<TermList> sc_;  // dim*dim, row-major (i, j)
    std::optional<Element> identity_;
};

struct AlgebraReport {
    bool associative = false;
    bool unital = false;
    std::vector<std::string> failures;
};

// Associativity on all basis triples plus the two-sided identity check
// (when the algebra declares one).
AlgebraReport check_algebra(const StructureAlgebra& alg);

// Module over a structure algebra: a matrix per basis element, satisfying
// rho(b_i) rho(b_j) = sum_k c_{ij}^k rho(b_k).
struct AlgebraMod {
    StructureAlgebra algebra;
    long dim_w = 0;
    std::vector<Matrix<Cyclotomic>> action;  // indexed by algebra basis

    Matrix<Cyclotomic> act(const StructureAlgebra::Element& x) const;
};

struct ModuleReport {
    bool ok = false;
    std::vector<std::string> failures;
};

ModuleReport check_module(const AlgebraMod& mod);

// dim of the radical of the trace form (x, y) -> tr(L_x L_y); zero iff the
// algebra is semisimple in characteristic zero.
long radical_dim(const StructureAlgebra& alg);

// dim of { X : X rho(b) = rho(b) X for all basis b }; 1 certifies that the
// module is simple (with algebraically closed scalars, or as an exact
// endomorphism count over the cyclotomic base).
long commutant_dim(const AlgebraMod& mod);

}  // namespace zhualg
