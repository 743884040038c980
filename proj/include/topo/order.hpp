#pragma once

#include <optional>
#include <vector>

#include "topo/maps.hpp"
#include "topo/topology.hpp"

namespace topo {

enum class Flavor { Strict, Reflexive };

const char* flavor_name(Flavor f);

// Transitive relation; reflexive exactly when the flavor is Reflexive.
class Preorder {
 public:
  Preorder() = default;
  // Throws NotPreorder.
  Preorder(FiniteRelation rel, Flavor flavor);
  // 0 < 1 < ... < n-1, or with <= for the reflexive flavor.
  static Preorder chain(int n, Flavor flavor);
  // Blocks of consecutive points; x below y iff block(x) < block(y), or <= when reflexive.
  static Preorder clusters(const std::vector<int>& block_sizes, Flavor flavor);
  // Zigzag 0 < 1 > 2 < 3 > ...
  static Preorder fence(int n, Flavor flavor);

  int n() const { return rel_.n(); }
  Flavor flavor() const { return flavor_; }
  const FiniteRelation& relation() const { return rel_; }
  bool below(int x, int y) const { return rel_.related(x, y); }
  // ]-inf,x[ and ]x,inf[
  Subset lower(int x) const { return rel_.column(x); }
  Subset upper(int x) const { return rel_.row(x); }

 private:
  FiniteRelation rel_;
  Flavor flavor_ = Flavor::Strict;
};

struct RelationReport {
  bool transitive = false;
  bool reflexive = false;
  bool connective = false;
  bool full_domain = false;
  bool full_range = false;
  bool full_field = false;
  bool interval_intersection = false;
  bool interval_relation = false;
  bool least_upper_bound = false;
};
RelationReport relation_properties(const Preorder& p);

bool has_full_domain(const Preorder& p);
bool has_full_range(const Preorder& p);
bool has_full_field(const Preorder& p);
bool is_connective(const Preorder& p);
// Every nonempty subset with an upper bound has a least one.
bool has_least_upper_bound_property(const Preorder& p);
// S- and S+ (each with the empty set) are closed under pairwise intersection.
bool has_interval_intersection_property(const Preorder& p);

// For x below z there is y in Y with x below y below z.
bool is_order_dense(const Preorder& p, Subset y);

// Segments over points of Y, plus the empty set.
SetSystem interval_subbase(const Preorder& p, Subset y);
SetSystem lower_segments(const Preorder& p, Subset y);
SetSystem upper_segments(const Preorder& p, Subset y);

// Throws NoFullField.
Topology interval_topology(const Preorder& p);
// Generated by the Y-restricted subbase. Throws NoFullField or SubbaseCriterionViolation.
Topology interval_topology_restricted(const Preorder& p, Subset y);

enum class Side { Lower, Upper };
// Throws MissingFullDomain / MissingFullRange unless p is a total strict order with
// the least upper bound property, in which case segments plus {}, X form the topology.
Topology one_sided_topology(const Preorder& p, Side side);

// Segments of every member. Throws NoFullField when the family misses a point.
Topology family_interval_topology(int n, const std::vector<Preorder>& family);

// x S y iff f(x) R f(y)
Preorder pullback(const Preorder& p, const FiniteMap& f);

// Full-domain preorder and a set Y whose lower segments fail to be a base
// of the topology the full lower segments generate.
struct OneSidedGap {
  Preorder p;
  Subset y = 0;
};
std::optional<OneSidedGap> search_one_sided_gap(int max_n, Flavor flavor);

// All preorders of the given flavor on n points (n <= 4).
std::vector<Preorder> all_preorders(int n, Flavor flavor);

}  // namespace topo
