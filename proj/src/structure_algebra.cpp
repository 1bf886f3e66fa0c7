#include "zhualg/structure_algebra.hpp"

#include <string>

#include "zhualg/errors.hpp"

namespace zhualg {

StructureAlgebra::StructureAlgebra(long dim)
    : dim_(dim), labels_(static_cast<std::size_t>(dim)), sc_(static_cast<std::size_t>(dim * dim)) {
    if (dim < 1) throw InputError("structure algebra needs positive dimension");
    for (long i = 0; i < dim; ++i) labels_[static_cast<std::size_t>(i)] = "b" + std::to_string(i);
}

const StructureAlgebra::TermList& StructureAlgebra::sc(long i, long j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw InputError("structure constant index out of range");
    return sc_[static_cast<std::size_t>(i * dim_ + j)];
}

void StructureAlgebra::set_sc(long i, long j, TermList terms) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw InputError("structure constant index out of range");
    sc_[static_cast<std::size_t>(i * dim_ + j)] = std::move(terms);
}

StructureAlgebra::Element StructureAlgebra::basis(long i) const {
    Element e = zero();
    e[static_cast<std::size_t>(i)] = Cyclotomic(1);
    return e;
}

StructureAlgebra::Element StructureAlgebra::mul(const Element& x, const Element& y) const {
    if (x.size() != static_cast<std::size_t>(dim_) || y.size() != static_cast<std::size_t>(dim_))
        throw DimensionMismatchError("element length does not match algebra dimension");
    Element out = zero();
    for (long i = 0; i < dim_; ++i) {
        const Cyclotomic& xi = x[static_cast<std::size_t>(i)];
        if (xi.is_zero()) continue;
        for (long j = 0; j < dim_; ++j) {
            const Cyclotomic& yj = y[static_cast<std::size_t>(j)];
            if (yj.is_zero()) continue;
            const Cyclotomic f = xi * yj;
            for (const auto& [k, c] : sc(i, j)) out[static_cast<std::size_t>(k)] += f * c;
        }
    }
    return out;
}

StructureAlgebra::Element StructureAlgebra::mul_basis(long i, long j) const {
    Element out = zero();
    for (const auto& [k, c] : sc(i, j)) out[static_cast<std::size_t>(k)] += c;
    return out;
}

Matrix<Cyclotomic> StructureAlgebra::left_regular(const Element& x) const {
    Matrix<Cyclotomic> m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (long j = 0; j < dim_; ++j)
        for (long i = 0; i < dim_; ++i) {
            const Cyclotomic& xi = x[static_cast<std::size_t>(i)];
            if (xi.is_zero()) continue;
            for (const auto& [k, c] : sc(i, j))
                m.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) += xi * c;
        }
    return m;
}

Matrix<Cyclotomic> StructureAlgebra::left_regular_basis(long i) const {
    Matrix<Cyclotomic> m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (long j = 0; j < dim_; ++j)
        for (const auto& [k, c] : sc(i, j))
            m.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) += c;
    return m;
}

AlgebraReport check_algebra(const StructureAlgebra& alg) {
    AlgebraReport rep;
    const long n = alg.dim();
    rep.associative = true;
    for (long i = 0; i < n && rep.associative; ++i) {
        for (long j = 0; j < n && rep.associative; ++j) {
            const StructureAlgebra::Element ij = alg.mul_basis(i, j);
            for (long k = 0; k < n; ++k) {
                const StructureAlgebra::Element lhs = alg.mul(ij, alg.basis(k));
                const StructureAlgebra::Element rhs = alg.mul(alg.basis(i), alg.mul_basis(j, k));
                if (lhs != rhs) {
                    rep.failures.push_back("associativity fails on basis triple (" +
                                           std::to_string(i) + ", " + std::to_string(j) + ", " +
                                           std::to_string(k) + ")");
                    rep.associative = false;
                    break;
                }
            }
        }
    }
    rep.unital = false;
    if (alg.identity().has_value()) {
        rep.unital = true;
        const StructureAlgebra::Element& e = *alg.identity();
        for (long i = 0; i < n; ++i) {
            const StructureAlgebra::Element b = alg.basis(i);
            if (alg.mul(e, b) != b || alg.mul(b, e) != b) {
                rep.failures.push_back("declared identity fails on basis element " +
                                       std::to_string(i));
                rep.unital = false;
                break;
            }
        }
    } else {
        rep.failures.push_back("no identity element declared");
    }
    return rep;
}

Matrix<Cyclotomic> AlgebraMod::act(const StructureAlgebra::Element& x) const {
    Matrix<Cyclotomic> m(static_cast<std::size_t>(dim_w), static_cast<std::size_t>(dim_w));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        m = m + x[i] * action[i];
    }
    return m;
}

ModuleReport check_module(const AlgebraMod& mod) {
    ModuleReport rep;
    const long n = mod.algebra.dim();
    if (mod.action.size() != static_cast<std::size_t>(n)) {
        rep.failures.push_back("module action table does not cover the basis");
        return rep;
    }
    for (const auto& m : mod.action)
        if (m.rows() != static_cast<std::size_t>(mod.dim_w) ||
            m.cols() != static_cast<std::size_t>(mod.dim_w)) {
            rep.failures.push_back("module action matrix has wrong shape");
            return rep;
        }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Matrix<Cyclotomic> rhs(static_cast<std::size_t>(mod.dim_w),
                                   static_cast<std::size_t>(mod.dim_w));
            for (const auto& [k, c] : mod.algebra.sc(i, j))
                rhs = rhs + c * mod.action[static_cast<std::size_t>(k)];
            const Matrix<Cyclotomic> lhs =
                mod.action[static_cast<std::size_t>(i)] * mod.action[static_cast<std::size_t>(j)];
            if (lhs != rhs) {
                rep.failures.push_back("module axiom fails on basis pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")");
                return rep;
            }
        }
    if (mod.algebra.identity().has_value()) {
        const Matrix<Cyclotomic> e = mod.act(*mod.algebra.identity());
        if (e != Matrix<Cyclotomic>::identity(static_cast<std::size_t>(mod.dim_w))) {
            rep.failures.push_back("algebra identity does not act as the identity matrix");
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

long radical_dim(const StructureAlgebra& alg) {
    const long n = alg.dim();
    // Gram matrix of the trace form: tr(L_i L_j) = sum_{p,k} c_{ip}^k c_{jk}^p.
    Matrix<Cyclotomic> gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Cyclotomic acc(0);
            for (long p = 0; p < n; ++p)
                for (const auto& [k, cip] : alg.sc(i, p))
                    for (const auto& [p2, cjk] : alg.sc(j, k))
                        if (p2 == p) acc += cip * cjk;
            gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
        }
    return n - static_cast<long>(rank_exact(gram));
}

long commutant_dim(const AlgebraMod& mod) {
    const long n = mod.algebra.dim();
    const long d = mod.dim_w;
    const std::size_t cols = static_cast<std::size_t>(d * d);
    Matrix<Cyclotomic> sys(static_cast<std::size_t>(n) * cols, cols);
    std::size_t row = 0;
    for (long b = 0; b < n; ++b) {
        const Matrix<Cyclotomic>& rho = mod.action[static_cast<std::size_t>(b)];
        // X rho - rho X = 0, unknowns X[u][v] flattened as u*d + v.
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c) {
                for (long k = 0; k < d; ++k) {
                    // + X[r][k] rho[k][c]
                    sys.at(row, static_cast<std::size_t>(r * d + k)) +=
                        rho.at(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
                    // - rho[r][k] X[k][c]
                    sys.at(row, static_cast<std::size_t>(k * d + c)) -=
                        rho.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
                }
                ++row;
            }
    }
    return static_cast<long>(cols - rank_exact(sys));
}

}  // namespace zhualg
