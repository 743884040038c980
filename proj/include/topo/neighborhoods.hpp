#pragma once

#include <optional>
#include <vector>

#include "topo/topology.hpp"

namespace topo {

// (x,U) with some open V, x in V, V inside U.
PointSetRelation neighborhood_system_of(const Topology& t);
// Restrictions of the neighborhood system to open resp. closed sets.
PointSetRelation open_neighborhoods(const Topology& t);
PointSetRelation closed_neighborhoods(const Topology& t);
// Sets that are neighborhoods of every point of A; the power set for A empty.
SetSystem neighborhoods_of_set(const PointSetRelation& ns, Subset a);

// Axioms (1)-(5): nonempty sections, x in U, supersets, pairwise
// intersections, and every U in N{x} has V in N{x} with U in N{y} for y in V.
std::optional<Violation> neighborhood_violation(const PointSetRelation& rel);
Topology topology_from_neighborhood_relation(const PointSetRelation& rel);

// Dense table A -> M(A) over all 2^n subsets.
using SetMap = std::vector<SetSystem>;
SetMap set_neighborhood_map(const Topology& t);
// Axioms (1)-(7): A inside U, supersets, pairwise intersections,
// U in M(A) has V in M(A) with U in M(V), M(A u B) = M(A) n M(B),
// M({}) is the power set, M(A) nonempty.
std::optional<Violation> set_map_violation(int n, const SetMap& m);
Topology topology_from_set_neighborhood_map(int n, const SetMap& m);

// Axioms (1)-(4): nonempty sections, x in U, meet refinement, and every
// U in B{x} has V in B{x} such that each y in V has some W in B{y} inside U.
std::optional<Violation> neighborhood_base_violation(const PointSetRelation& rel);
bool is_neighborhood_base_of(const PointSetRelation& rel, const Topology& t);
// (x,U) with U in the base and x in U. Throws NotABase.
PointSetRelation neighborhood_base_from_topological_base(const SetSystem& base, const Topology& t);
Topology topology_from_neighborhood_base(const PointSetRelation& rel);

// A set A whose closed neighborhoods do not generate N<A>.
struct ClosedBaseGap {
  Topology t;
  Subset a;
};
std::optional<ClosedBaseGap> closed_neighborhood_gap(const Topology& t);

}  // namespace topo
