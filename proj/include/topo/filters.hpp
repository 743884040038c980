#pragma once

#include <optional>
#include <vector>

#include "topo/maps.hpp"
#include "topo/topology.hpp"

namespace topo {

// Axioms: (1) empty set excluded, (2) X included, (3) pairwise intersections,
// (4) supersets.
std::optional<Violation> filter_violation(const SetSystem& sys);
inline bool is_filter(const SetSystem& sys) { return !filter_violation(sys); }

class Filter {
 public:
  // Throws NotAFilter.
  explicit Filter(SetSystem members);
  const SetSystem& members() const { return members_; }
  int n() const { return members_.n(); }
  bool has(Subset a) const { return members_.has(a); }
  // Intersection of all members; the filter is Phi of this single set.
  Subset core() const { return members_.big_intersection(); }
  bool operator==(const Filter&) const = default;
  std::strong_ordering operator<=>(const Filter&) const = default;

 private:
  SetSystem members_;
};

// Axioms: (1) nonempty, (2) empty set excluded, (3) every pairwise
// intersection contains a member.
std::optional<Violation> filter_base_violation(const SetSystem& sys);

class FilterBase {
 public:
  // Throws FilterBaseViolation.
  explicit FilterBase(SetSystem members);
  FilterBase(const Filter& f) : members_(f.members()) {}
  const SetSystem& members() const { return members_; }
  int n() const { return members_.n(); }
  bool operator==(const FilterBase&) const = default;

 private:
  SetSystem members_;
};

bool has_finite_intersection_property(const SetSystem& sys);
// a is finer than b: Phi(b) is contained in Phi(a), i.e. every member of b
// contains some member of a.
bool phi_finer(const SetSystem& a, const SetSystem& b);

Filter generate_filter(const FilterBase& base);
Filter principal_filter(int n, Subset core);
Filter point_filter(int n, int x);
Subset cluster_points(const Filter& f);
bool is_ultrafilter(const Filter& f);
Filter extend_to_ultrafilter(const FilterBase& base);
// All filters on n points, by brute force over set systems (n <= 4).
std::vector<Filter> all_filters_bruteforce(int n);

// Meets of one member from each of a nonempty selection of the bases.
// Throws EmptyMeet when one of them is empty.
FilterBase supremum_of_filterbases(const std::vector<FilterBase>& bases);

Filter image_filter(const FilterBase& base, const FiniteMap& f);
// Base lives on the target of f. Throws NotSurjective.
Filter inverse_image_filter(const FilterBase& base, const FiniteMap& f);

}  // namespace topo
