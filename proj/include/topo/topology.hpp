#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/setops.hpp"

namespace topo {

// First failed axiom of some axiom list, with up to two witness sets.
struct Violation {
  int axiom = 0;
  Subset a = 0;
  Subset b = 0;
  std::string detail;
  int point = -1;
};

// Axioms: (1) empty set and X are members, (2) unions, (3) pairwise intersections.
std::optional<Violation> topology_violation(const SetSystem& sys);
inline bool is_topology(const SetSystem& sys) { return !topology_violation(sys); }

class Topology {
 public:
  Topology() : opens_(0, {0}) {}
  // Throws NotATopology.
  explicit Topology(SetSystem opens);

  static Topology discrete(int n);
  static Topology indiscrete(int n);
  static Topology cofinite(int n);
  // {}, {0}, {0,1}
  static Topology sierpinski();

  int n() const { return opens_.n(); }
  Subset full() const { return opens_.full(); }
  const SetSystem& opens() const { return opens_; }
  bool is_open(Subset a) const { return opens_.has(a); }
  bool is_closed(Subset a) const { return opens_.has(complement(a, n())); }
  SetSystem closeds() const;

  bool operator==(const Topology&) const = default;
  std::strong_ordering operator<=>(const Topology&) const = default;

 private:
  SetSystem opens_;
};

class ClosedSystem {
 public:
  // Throws ClosedAxiomViolation.
  explicit ClosedSystem(SetSystem closeds);
  const SetSystem& closeds() const { return closeds_; }
  int n() const { return closeds_.n(); }
  bool operator==(const ClosedSystem&) const = default;

 private:
  SetSystem closeds_;
};

// Axioms: (1) empty set and X, (2) nonempty intersections, (3) pairwise unions.
std::optional<Violation> closed_system_violation(const SetSystem& sys);
ClosedSystem closed_system(const Topology& t);
Topology topology_from_closed(const ClosedSystem& c);
SetSystem complements(const SetSystem& sys);

// Base criteria: (1) empty set is a member, (2) union is X,
// (3) every pairwise intersection is a union of members.
std::optional<Violation> base_violation(const SetSystem& base);
Topology generate_from_base(const SetSystem& base);
bool is_base_for(const SetSystem& base, const Topology& t);

// Subbase criteria: (1) nonempty, (2) union is X, (3) lacks the finite
// intersection property, so the empty set is a finite intersection.
std::optional<Violation> subbase_violation(const SetSystem& sub);
Topology generate_from_subbase(const SetSystem& sub);

enum class Comparison { Equal, StrictlyFiner, StrictlyCoarser, Incomparable };
// How t1 relates to t2. "finer" means t2 is contained in t1.
Comparison compare(const Topology& t1, const Topology& t2);
inline bool is_finer(const Topology& t1, const Topology& t2) { return t2.opens().is_subfamily_of(t1.opens()); }
const char* comparison_name(Comparison c);

// Every topology on a finite carrier has a finite, hence countable, base.
inline bool first_countable(const Topology&) { return true; }
inline bool second_countable(const Topology&) { return true; }

// Enumeration. A family over at most 5 points is a bit mask over the 2^n subsets.
using FamilyMask = std::uint64_t;
Topology topology_from_mask(int n, FamilyMask mask);
FamilyMask mask_of(const SetSystem& sys);
bool mask_is_topology(int n, FamilyMask mask);

// Brute force over all 2^(2^n) systems, n <= 4.
std::vector<FamilyMask> enumerate_bruteforce(int n);
// Backtracking over union- and intersection-closed families, n <= 5.
std::vector<FamilyMask> enumerate_backtrack(int n);
// n <= 4 brute force, n = 5 backtracking; sorted canonically. Throws CapExceeded for n > 5.
std::vector<Topology> enumerate_topologies(int n);
std::size_t count_topologies(int n);

}  // namespace topo
