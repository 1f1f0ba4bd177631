#include "schubertlab/json_io.hpp"

#include <stdexcept>

namespace schubertlab {

using nlohmann::ordered_json;

nlohmann::ordered_json poly_to_json(const LaurentPolynomial& f) {
    // leading variables first, matching how the polynomials are written out
    ordered_json terms = ordered_json::array();
    const auto& m = f.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        terms.push_back({{"exp", it->first}, {"coeff", it->second}});
    return {{"arity", f.arity()}, {"terms", terms}};
}

nlohmann::ordered_json diagram_to_json(const Diagram& d) {
    ordered_json boxes = ordered_json::array();
    for (const Box& b : d.boxes()) boxes.push_back({b.row, b.col});
    return {{"rows", d.rowCount()}, {"boxes", boxes}};
}

nlohmann::ordered_json point_to_json(const TrianglePoint& p) {
    return {{"size", p.size}, {"entries", p.entries}};
}

nlohmann::ordered_json lattice_to_json(const LatticePointSet& s) {
    ordered_json pts = ordered_json::array();
    for (const TrianglePoint& p : s.points) pts.push_back(p.entries);
    return {{"size", s.size}, {"count", s.points.size()}, {"points", pts}};
}

namespace {

std::pair<int, int> triangle_coords(int n, int offset) {
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (triangle_offset(n, i, j) == offset) return {i, j};
    throw std::invalid_argument("triangle offset out of range");
}

} // namespace

nlohmann::ordered_json system_to_json(const InequalitySystem& sys) {
    ordered_json cons = ordered_json::array();
    for (const AffineConstraint& c : sys.constraints) {
        ordered_json terms = ordered_json::array();
        for (const auto& [o, v] : c.terms) {
            const auto [i, j] = triangle_coords(sys.size, o);
            terms.push_back({i, j, v});
        }
        cons.push_back({{"sense", c.sense == Sense::Eq ? "eq" : "ge"},
                        {"terms", terms},
                        {"constant", c.constant}});
    }
    return {{"size", sys.size}, {"constraints", cons}};
}

nlohmann::ordered_json network_to_json(const FlowNetwork& net) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : net.edges) edges.push_back({u, v});
    return {{"vertices", net.labels}, {"edges", edges}, {"netflow", net.netflow}};
}

nlohmann::ordered_json theorem1_report_to_json(const Theorem1Report& r) {
    ordered_json j{{"w", r.w},
                   {"columnConvex", r.columnConvex},
                   {"latticeCount", r.latticeCount},
                   {"equalSchubert", r.equalSchubert},
                   {"equalCharacter", r.equalCharacter},
                   {"millis", r.millis}};
    if (!r.columnConvex) j["patternWitness"] = r.patternWitness;
    if (r.columnConvex && (!r.equalSchubert || !r.equalCharacter)) {
        j["projected"] = poly_to_json(r.projected);
        j["schubert"] = poly_to_json(r.schubertPoly);
        j["character"] = poly_to_json(r.characterPoly);
    }
    return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
    if (!j.contains("rows") || !j.contains("boxes"))
        throw std::invalid_argument("diagram JSON needs 'rows' and 'boxes'");
    std::vector<Box> boxes;
    for (const auto& b : j.at("boxes")) {
        if (!b.is_array() || b.size() != 2)
            throw std::invalid_argument("diagram JSON: each box is a [row, col] pair");
        boxes.push_back({b[0].get<int>(), b[1].get<int>()});
    }
    return Diagram(j.at("rows").get<int>(), boxes);
}

} // namespace schubertlab
