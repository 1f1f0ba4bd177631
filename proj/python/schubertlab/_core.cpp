#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/flow_network.hpp"
#include "schubertlab/gt_polytope.hpp"
#include "schubertlab/laurent.hpp"
#include "schubertlab/minkowski.hpp"
#include "schubertlab/schubert.hpp"

namespace py = pybind11;
using namespace schubertlab;

namespace {

// polynomial as {exponent tuple: coefficient}
py::dict poly_dict(const LaurentPolynomial& f) {
    py::dict d;
    for (const auto& [e, c] : f.terms()) {
        py::tuple key(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
        d[key] = c;
    }
    return d;
}

Partition to_partition(const std::vector<std::int64_t>& parts) { return Partition(parts); }

ParFamily to_family(const std::vector<std::vector<std::int64_t>>& shapes) {
    std::vector<Partition> ps;
    for (const auto& s : shapes) ps.emplace_back(s);
    return ParFamily(ps);
}

std::vector<std::vector<std::int64_t>> lattice_rows(const LatticePointSet& pts) {
    std::vector<std::vector<std::int64_t>> out;
    for (const TrianglePoint& p : pts.points) out.push_back(p.entries);
    return out;
}

Diagram to_diagram(int rows, const std::vector<std::pair<int, int>>& boxes) {
    std::vector<Box> bs;
    for (const auto& [r, c] : boxes) bs.push_back({r, c});
    return Diagram(rows, bs);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lattice-point computations: Schubert polynomials, Gelfand-Tsetlin "
              "polytopes, Minkowski sums, and flow networks";

    m.def(
        "schubert",
        [](const std::vector<int>& w) { return poly_dict(schubert(Permutation(w))); },
        py::arg("w"), "Schubert polynomial of a permutation, as {exponents: coefficient}");

    m.def(
        "flagged_character",
        [](const std::vector<int>& w) {
            return poly_dict(flagged_character(rothe_diagram(Permutation(w))));
        },
        py::arg("w"), "flagged Schur module character of the Rothe diagram of w");
    m.def(
        "flagged_character",
        [](int rows, const std::vector<std::pair<int, int>>& boxes) {
            return poly_dict(flagged_character(to_diagram(rows, boxes)));
        },
        py::arg("rows"), py::arg("boxes"),
        "flagged Schur module character of an explicit column-convex diagram");

    m.def(
        "rothe_diagram",
        [](const std::vector<int>& w) {
            const Diagram d = rothe_diagram(Permutation(w));
            std::vector<std::pair<int, int>> out;
            for (const Box& b : d.boxes()) out.emplace_back(b.row, b.col);
            return out;
        },
        py::arg("w"), "Rothe diagram boxes as (row, col) pairs, 1-based");

    m.def(
        "is_column_convex",
        [](const std::vector<int>& w) { return is_column_convex(rothe_diagram(Permutation(w))); },
        py::arg("w"));

    m.def(
        "avoids_patterns",
        [](const std::vector<int>& w) {
            std::vector<int> witness;
            const bool ok = avoids_patterns(Permutation(w), &witness);
            return std::make_pair(ok, witness);
        },
        py::arg("w"), "(avoids, witness positions) for the two forbidden patterns");

    m.def(
        "par_family",
        [](const std::vector<int>& w) {
            const ParFamily fam = par_family(rothe_diagram(Permutation(w)));
            std::vector<std::vector<std::int64_t>> out;
            for (const Partition& p : fam.shapes()) out.push_back(p.parts());
            return out;
        },
        py::arg("w"), "the partition family of the Rothe diagram of w");

    m.def(
        "gt_lattice",
        [](const std::vector<std::int64_t>& lambda) {
            return lattice_rows(enumerate_lattice(gt_system(to_partition(lambda))));
        },
        py::arg("lam"), "lattice points of GT(lambda), row-major triangle entries");
    m.def(
        "gt_count",
        [](const std::vector<std::int64_t>& lambda) {
            return static_cast<std::int64_t>(
                enumerate_lattice(gt_system(to_partition(lambda))).points.size());
        },
        py::arg("lam"));
    m.def(
        "schur",
        [](const std::vector<std::int64_t>& lambda) {
            return poly_dict(schur(to_partition(lambda)));
        },
        py::arg("lam"), "Schur polynomial from the GT lattice, as {exponents: coefficient}");

    m.def(
        "minkowski_lattice",
        [](const std::vector<std::vector<std::int64_t>>& fam) {
            return lattice_rows(enumerate_lattice(q_system(to_family(fam))));
        },
        py::arg("family"), "lattice points of the Minkowski sum polytope of a family");
    m.def(
        "minkowski_count",
        [](const std::vector<std::vector<std::int64_t>>& fam) {
            return static_cast<std::int64_t>(
                enumerate_lattice(q_system(to_family(fam))).points.size());
        },
        py::arg("family"));

    m.def(
        "flow_count",
        [](const std::vector<std::int64_t>& lambda, std::int64_t dilate) {
            return static_cast<std::int64_t>(
                integer_flows(build_g_lambda(to_partition(lambda).scaled(dilate)).net).size());
        },
        py::arg("lam"), py::arg("dilate") = 1, "number of integer flows of G_lambda");
    m.def(
        "flow_equiv",
        [](const std::vector<std::int64_t>& lambda, std::int64_t dilate) {
            const Partition lam = to_partition(lambda).scaled(dilate);
            const GLambdaNetwork g = build_g_lambda(lam);
            const auto flows = integer_flows(g.net);
            const auto pts = enumerate_lattice(gt_system(lam));
            if (flows.size() != pts.points.size()) return false;
            for (const TrianglePoint& x : pts.points) {
                const Flow f = gt_to_flow(g, x);
                if (!is_flow(g.net, f) || !(flow_to_gt(g, f) == x)) return false;
            }
            return true;
        },
        py::arg("lam"), py::arg("dilate") = 1,
        "GT(lambda) lattice and G_lambda flows are in bijection");

    m.def(
        "verify_theorem1",
        [](const std::vector<int>& w) {
            const Theorem1Report r = verify_theorem1(Permutation(w));
            py::dict d;
            d["w"] = r.w;
            d["columnConvex"] = r.columnConvex;
            d["patternWitness"] = r.patternWitness;
            d["latticeCount"] = r.latticeCount;
            d["equalSchubert"] = r.equalSchubert;
            d["equalCharacter"] = r.equalCharacter;
            d["ok"] = r.ok();
            d["millis"] = r.millis;
            return d;
        },
        py::arg("w"),
        "end-to-end check: projected transform against Schubert polynomial and character");
}
