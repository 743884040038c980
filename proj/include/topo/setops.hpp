#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "topo/bits.hpp"
#include "topo/errors.hpp"

namespace topo {

// A family of subsets of {0..n-1}, kept sorted ascending and deduplicated.
class SetSystem {
 public:
  SetSystem() = default;
  explicit SetSystem(int n) : n_(n) { check_carrier(n); }
  SetSystem(int n, std::vector<Subset> sets);

  static SetSystem power_set(int n);
  // Build from a dense membership table indexed by subset.
  static SetSystem from_table(int n, const std::vector<char>& table);

  int n() const { return n_; }
  Subset full() const { return full_set(n_); }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool has(Subset s) const;
  bool is_subfamily_of(const SetSystem& other) const;
  std::vector<char> table() const;

  // Only defined for nonempty systems; callers check empty() first.
  Subset big_union() const;
  Subset big_intersection() const;

  SetSystem with(Subset s) const;
  SetSystem merged(const SetSystem& other) const;
  SetSystem intersected(const SetSystem& other) const;

  bool operator==(const SetSystem&) const = default;
  std::strong_ordering operator<=>(const SetSystem&) const = default;

 private:
  int n_ = 0;
  std::vector<Subset> sets_;
};

// Pairs (x, A) with x a point and A a subset.
class PointSetRelation {
 public:
  using Pair = std::pair<int, Subset>;

  PointSetRelation() = default;
  explicit PointSetRelation(int n) : n_(n) { check_carrier(n); }
  PointSetRelation(int n, std::vector<Pair> pairs);
  static PointSetRelation from_sections(const std::vector<SetSystem>& sections);

  int n() const { return n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool has(int x, Subset a) const;

  // R{x}
  SetSystem section(int x) const;
  std::vector<SetSystem> sections() const;
  // R[A]: union of the sections over x in A.
  SetSystem image(Subset a) const;
  // R<A>: intersection of the sections over x in A; R<{}> is the power set.
  SetSystem meet(Subset a) const;

  bool operator==(const PointSetRelation&) const = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
};

// Finite intersections of nonempty subfamilies.
SetSystem psi(const SetSystem& sys);
// Unions of nonempty subfamilies, via pairwise-union closure.
SetSystem theta(const SetSystem& sys);
// All supersets of members.
SetSystem phi(const SetSystem& sys);
PointSetRelation phi_prime(const PointSetRelation& rel);

}  // namespace topo
