#pragma once
#include <string>

#include <json.hpp>

#include "schubertlab/combinatorics.hpp"
#include "schubertlab/flow_network.hpp"
#include "schubertlab/gt_polytope.hpp"
#include "schubertlab/laurent.hpp"
#include "schubertlab/minkowski.hpp"

// canonical JSON forms; byte-identical output for identical inputs
namespace schubertlab {

nlohmann::ordered_json poly_to_json(const LaurentPolynomial& f);
nlohmann::ordered_json diagram_to_json(const Diagram& d);
nlohmann::ordered_json point_to_json(const TrianglePoint& p);
nlohmann::ordered_json lattice_to_json(const LatticePointSet& s);
nlohmann::ordered_json system_to_json(const InequalitySystem& sys);
nlohmann::ordered_json network_to_json(const FlowNetwork& net);
nlohmann::ordered_json theorem1_report_to_json(const Theorem1Report& r);

Diagram diagram_from_json(const nlohmann::json& j);

} // namespace schubertlab
