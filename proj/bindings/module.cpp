#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "zhualg/binomdet.hpp"
#include "zhualg/cyclotomic.hpp"
#include "zhualg/fixtures.hpp"
#include "zhualg/matrix.hpp"
#include "zhualg/rational.hpp"
#include "zhualg/structure_algebra.hpp"
#include "zhualg/twisted_double.hpp"
#include "zhualg/wedderburn.hpp"
#include "zhualg/zhu.hpp"

namespace py = pybind11;
using namespace zhualg;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }

std::vector<Rational> rats(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const std::string& s : xs) out.push_back(rat(s));
    return out;
}

py::dict modes_dict(const ModeVector& v) {
    py::dict d;
    for (const auto& [mode, c] : v) d[py::int_(mode)] = c.str();
    return d;
}

Matrix<Rational> rat_matrix(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n = rows.size();
    const std::size_t m = n == 0 ? 0 : rows[0].size();
    Matrix<Rational> a(n, m);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != m) throw InputError("matrix rows have unequal lengths");
        for (std::size_t c = 0; c < m; ++c) a.at(r, c) = rat(rows[r][c]);
    }
    return a;
}

TwistParams twist(long T, long l, long i) {
    TwistParams p{T, l, i};
    validate_twist(p);
    return p;
}

WeightContext weights(const TwistParams& p, long wt_u, long wt_v, long M) {
    WeightContext w{wt_u, wt_v, M};
    validate_weights(p, w);
    return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for twisted-product coefficient systems, binomial "
              "determinant identities, and twisted double algebras.";

    m.def("binom", [](const std::string& q, long j) { return binom_general(rat(q), j).str(); },
          py::arg("q"), py::arg("j"),
          "Generalized binomial coefficient C(q, j) of a rational \"num/den\" string.");

    m.def("det_rational",
          [](const std::vector<std::vector<std::string>>& rows) {
              return det_exact(rat_matrix(rows)).str();
          },
          py::arg("rows"), "Exact determinant of a rational matrix given as strings.");

    m.def("cyclo_str", [](unsigned N, long k) { return cyclo_eval(N, k).str(); },
          py::arg("N"), py::arg("k"), "The root of unity zeta_N^k, reduced and printed.");

    m.def("q_exponents",
          [](long T, long l, long i, long wt_u) {
              const std::vector<Rational> q = q_values(twist(T, l, i), wt_u);
              std::vector<std::string> out;
              for (const Rational& v : q) out.push_back(v.str());
              return out;
          },
          py::arg("T"), py::arg("l"), py::arg("i"), py::arg("wt_u"),
          "Gradation exponents Q_r for residues r = 0..T-1.");

    m.def("solve_correction",
          [](long T, long l, long i, long wt_u, long wt_v, long M, long r, long pmode) {
              const TwistParams p = twist(T, l, i);
              return modes_dict(solve_F(p, weights(p, wt_u, wt_v, M), r, pmode));
          },
          py::arg("T"), py::arg("l"), py::arg("i"), py::arg("wt_u"), py::arg("wt_v"),
          py::arg("M"), py::arg("r"), py::arg("pmode"),
          "Correction vector for one residue and probed mode, as {mode: \"num/den\"}.");

    m.def("unified_product",
          [](long T, long l, long i, long wt_u, long wt_v, long M) {
              const TwistParams p = twist(T, l, i);
              return modes_dict(unified_product_coeffs(p, weights(p, wt_u, wt_v, M)));
          },
          py::arg("T"), py::arg("l"), py::arg("i"), py::arg("wt_u"), py::arg("wt_v"),
          py::arg("M"), "Unified product coefficients as {mode: \"num/den\"}.");

    m.def("classical_product",
          [](long l, long wt_u, long M) { return modes_dict(classical_star_coeffs(l, wt_u, M)); },
          py::arg("l"), py::arg("wt_u"), py::arg("M"),
          "Classical product coefficients as {mode: \"num/den\"}.");

    m.def("verify_congruence",
          [](long T, long l, long i, long wt_u, long wt_v, long M, long K) {
              const TwistParams p = twist(T, l, i);
              const WeightContext w = weights(p, wt_u, wt_v, M);
              if (K < 0) K = M + 4 * l + 40;
              const CongruenceReport rep = verify_product_congruence(p, w, K);
              py::list residues;
              for (const ResidueWitness& rw : rep.residues) {
                  py::dict d;
                  d["r"] = rw.r;
                  d["member"] = rw.member;
                  d["residual_support"] = rw.residual_support;
                  residues.append(d);
              }
              py::dict out;
              out["pass"] = rep.pass;
              out["residues"] = residues;
              return out;
          },
          py::arg("T"), py::arg("l"), py::arg("i"), py::arg("wt_u"), py::arg("wt_v"),
          py::arg("M"), py::arg("K") = -1,
          "Check the unified-vs-classical congruence residue by residue.");

    m.def("det_closed_form",
          [](long a, long b, long t, const std::vector<std::string>& x) {
              return zhualg::det_closed_form(DetInstance{a, b, t, rats(x)}).str();
          },
          py::arg("a"), py::arg("b"), py::arg("t"), py::arg("x"),
          "Closed-form value of the block binomial determinant.");

    m.def("verify_det_identity",
          [](long a, long b, long t, const std::vector<std::string>& x) {
              const IdentityReport rep = verify_identity(DetInstance{a, b, t, rats(x)});
              py::dict out;
              out["det"] = rep.det.str();
              out["closed_form"] = rep.closed_form.str();
              out["pass"] = rep.pass;
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("t"), py::arg("x"),
          "Exact determinant vs the closed-form product.");

    m.def("specialization_point",
          [](long a, long b, long t) {
              std::vector<std::string> out;
              for (const Rational& v : zhualg::specialization_point(a, b, t))
                  out.push_back(v.str());
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("t"),
          "Evaluation point at which the matrix becomes anti-triangular.");

    m.def("fixture_summary",
          [](const std::string& path) {
              const Fixture f = load_fixture(path);
              const TwistedDouble td = TwistedDouble::build(f.group, f.points, f.cocycle);
              py::dict out;
              out["dim"] = td.dim();
              out["radical_dim"] = radical_dim(td.algebra());
              out["blocks"] = wedderburn_numeric(td.algebra()).block_dims;
              std::vector<long> orbit_sizes;
              for (const auto& orbit : td.orbits().orbits)
                  orbit_sizes.push_back(static_cast<long>(orbit.size()));
              out["orbit_sizes"] = orbit_sizes;
              py::list mods;
              for (const FixtureModule& fm : f.modules) {
                  const AlgebraMod w = module_from_fixture(td, fm);
                  const AlgebraMod ind = td.induce(fm.point, w);
                  py::dict d;
                  d["point"] = fm.point;
                  d["dim_w"] = fm.dim;
                  d["induced_dim"] = ind.dim_w;
                  d["commutant_dim"] = commutant_dim(ind);
                  mods.append(d);
              }
              out["modules"] = mods;
              return out;
          },
          py::arg("path"),
          "Load a fixture file, build the twisted double, and summarize blocks, "
          "orbits, and induced modules.");
}
