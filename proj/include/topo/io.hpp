#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "topo/closure.hpp"
#include "topo/convergence.hpp"
#include "topo/generated.hpp"
#include "topo/metric.hpp"
#include "topo/neighborhoods.hpp"
#include "topo/numeric.hpp"
#include "topo/order.hpp"

namespace topo {

using json = nlohmann::ordered_json;

// All readers throw ParseError on malformed input; domain validation
// (e.g. NotATopology) is left to the constructors they call.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

json to_json(Subset a);
Subset subset_from_json(const json& j, int n);

json to_json(const SetSystem& s);
SetSystem set_system_from_json(const json& j);

json to_json(const Topology& t);
Topology topology_from_json(const json& j);

json to_json(const PointSetRelation& r);
PointSetRelation relation_from_json(const json& j);

json set_map_to_json(int n, const SetMap& m);
SetMap set_map_from_json(const json& j, int& n);

json operator_to_json(int n, const SubsetOperator& f);
SubsetOperator operator_from_json(const json& j, int& n);

// {"f": [...]} with optional target size "n"; default target is max + 1
// unless dst_n is given.
json to_json(const FiniteMap& f);
FiniteMap map_from_json(const json& j, int dst_n = -1);

// {"n": K, "pairs": [[i,j],...]} or {"n": K, "classes": [[...],...]}
FiniteRelation finite_relation_from_json(const json& j);

json to_json(const Preorder& p);
Preorder preorder_from_json(const json& j);

json to_json(const Net& net);
Net net_from_json(const json& j, int target_n);
json to_json(const Sequence& s);
Sequence sequence_from_json(const json& j);

json to_json(const PseudoMetric& m);
Matrix matrix_from_json(const json& j);

json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const json& j);
std::vector<Dyadic> dyadic_vector_from_json(const json& j);
Rational rational_from_json(const json& j);

// {"direction": "inverse"|"direct", "n": K, "pairs": [{"map": [...], "space": {...}}]}
json to_json(const GeneratingFamily& fam);
GeneratingFamily family_from_json(const json& j);

json to_json(const Limits& l);
json to_json(const SubsetAnalysis& a);
json to_json(const Violation& v);

}  // namespace topo
