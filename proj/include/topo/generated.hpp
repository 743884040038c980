#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topo/continuity.hpp"

namespace topo {

enum class Direction { Inverse, Direct };

// Inverse: every map goes from the n-point carrier into its topology's carrier.
// Direct: every map goes from its topology's carrier into the n-point carrier.
struct GeneratingFamily {
  Direction direction = Direction::Inverse;
  int n = 0;
  std::vector<std::pair<FiniteMap, Topology>> pairs;
};

// Throws UniverseMismatch when a map does not fit the carriers.
void validate_family(const GeneratingFamily& fam);

Topology inverse_image_topology(const GeneratingFamily& fam);
Topology direct_image_topology(const GeneratingFamily& fam);
Topology generated_topology(const GeneratingFamily& fam);

// Coarsest topology finer than all, and finest coarser than all.
Topology supremum(int n, const std::vector<Topology>& ts);
Topology infimum(int n, const std::vector<Topology>& ts);

struct Subspace {
  Topology t;
  std::vector<int> points;  // new index -> old point, increasing
};
Subspace subspace_topology(const Topology& t, Subset a);
// Old-carrier subset intersected with the subspace, in new indices.
Subset restrict_to(const Subspace& s, Subset b);
// New-index subset back in old indices.
Subset lift_from(const Subspace& s, Subset b);

struct Product {
  Topology t;
  std::vector<std::vector<int>> coords;  // row-major, last factor fastest
  std::vector<FiniteMap> projections;
};
// Throws CapExceeded when the product has more than 20 points.
Product product_topology(const std::vector<Topology>& ts);
// Point index of a coordinate tuple.
int product_index(const std::vector<Topology>& ts, const std::vector<int>& coord);
Subset box(const std::vector<Topology>& ts, const std::vector<Subset>& sides);

struct Quotient {
  Topology t;
  std::vector<Subset> classes;
  FiniteMap class_map;
};
// Throws NotEquivalence.
Quotient quotient_topology(const Topology& t, const FiniteRelation& eq);

// Pointwise convergence on all maps from an m-point set into y.
Product function_space(int m, const Topology& y);

struct UniversalWitness {
  Topology z;
  FiniteMap g;
};
struct UniversalCheck {
  bool holds = true;
  std::optional<UniversalWitness> witness;
};
// Test spaces range over every topology on 1..z_cap points; z_cap <= 3 or CapExceeded.
UniversalCheck check_universal_property(const GeneratingFamily& fam, const Topology& candidate, int z_cap = 3);

// Injective, and the source carries the topology pulled back from the target.
bool is_embedding(const SpaceMap& m);

}  // namespace topo
