#pragma once

#include <optional>
#include <vector>

#include "topo/filters.hpp"
#include "topo/maps.hpp"

namespace topo {

// Finite, nonempty, reflexive, transitive, and every pair has an upper bound.
class DirectedSet {
 public:
  DirectedSet() = default;
  // Throws NotDirected.
  explicit DirectedSet(FiniteRelation leq);

  static DirectedSet chain(int n);
  static DirectedSet product(const DirectedSet& a, const DirectedSet& b);

  int n() const { return leq_.n(); }
  bool leq(int i, int j) const { return leq_.related(i, j); }
  // {j : i <= j}
  Subset above(int i) const { return leq_.row(i); }
  const FiniteRelation& relation() const { return leq_; }

 private:
  FiniteRelation leq_;
};

class Net {
 public:
  Net() = default;
  Net(DirectedSet domain, int target_n, std::vector<int> values);

  const DirectedSet& domain() const { return domain_; }
  int target_n() const { return target_n_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  // {x_j : j >= i}
  Subset tail(int i) const;

 private:
  DirectedSet domain_;
  int target_n_ = 0;
  std::vector<int> values_;
};

bool eventually_in(const Net& net, Subset a);
bool frequently_in(const Net& net, Subset a);
Net map_net(const Net& net, const FiniteMap& f);
// Net on the product of the two domains with values (x_i, y_j) flattened row-major.
Net product_net(const Net& a, const Net& b);

// n -> pre[n] for n < |pre|, then cycle[(n - |pre|) mod |cycle|].
struct Sequence {
  std::vector<int> pre;
  std::vector<int> cycle;
  int at(std::size_t k) const;
};
void validate_sequence(const Sequence& s, int n);
bool eventually_in(const Sequence& s, Subset a);
bool frequently_in(const Sequence& s, Subset a);

struct Limits {
  Subset lim = 0;
  Subset adh = 0;
  bool operator==(const Limits&) const = default;
};

Limits filter_limits(const Topology& t, const Filter& f);
Limits filter_base_limits(const Topology& t, const SetSystem& base);
Limits net_limits(const Topology& t, const Net& net);
Limits sequence_limits(const Topology& t, const Sequence& s);

Filter filter_from_net(const Net& net);
// Domain {(x,B) : x in B in base}, (x,B) <= (y,C) iff C inside B, value x.
Net net_from_filterbase(const FilterBase& base);

// When x adheres to f: the filter generated by {F n U : F in f, U in N{x}},
// finer than f and convergent to x.
std::optional<Filter> finer_convergent_filter(const Topology& t, const Filter& f, int x);

}  // namespace topo
