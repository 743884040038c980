#pragma once

#include <vector>

#include "topo/setops.hpp"

namespace topo {

// Total function {0..src-1} -> {0..dst-1}.
class FiniteMap {
 public:
  FiniteMap() = default;
  FiniteMap(int src_n, int dst_n, std::vector<int> values);

  static FiniteMap identity(int n);
  static FiniteMap constant(int src_n, int dst_n, int value);

  int src_n() const { return src_n_; }
  int dst_n() const { return dst_n_; }
  int operator()(int x) const { return f_[x]; }
  const std::vector<int>& values() const { return f_; }

  Subset image(Subset a) const;
  Subset preimage(Subset b) const;
  SetSystem image(const SetSystem& sys) const;
  SetSystem preimage(const SetSystem& sys) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return src_n_ == dst_n_ && is_injective(); }
  FiniteMap inverse() const;

  bool operator==(const FiniteMap&) const = default;

 private:
  int src_n_ = 0;
  int dst_n_ = 0;
  std::vector<int> f_;
};

// g after f
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

// Binary relation on {0..n-1}; row(x) is the set of y with x R y.
class FiniteRelation {
 public:
  FiniteRelation() = default;
  explicit FiniteRelation(int n) : n_(n), rows_(n, 0) { check_carrier(n); }
  FiniteRelation(int n, const std::vector<std::pair<int, int>>& pairs);

  static FiniteRelation from_classes(int n, const std::vector<Subset>& classes);

  int n() const { return n_; }
  bool related(int x, int y) const { return contains(rows_[x], y); }
  Subset row(int x) const { return rows_[x]; }
  Subset column(int y) const;
  void add(int x, int y) { rows_[x] |= singleton(y); }
  std::vector<std::pair<int, int>> pairs() const;

  bool is_reflexive() const;
  bool is_irreflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }
  // Classes of an equivalence, ordered by smallest member.
  std::vector<Subset> classes() const;

  bool operator==(const FiniteRelation&) const = default;

 private:
  int n_ = 0;
  std::vector<Subset> rows_;
};

}  // namespace topo
