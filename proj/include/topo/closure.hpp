#pragma once

#include <optional>
#include <vector>

#include "topo/topology.hpp"

namespace topo {

struct SubsetAnalysis {
  Subset interior = 0;
  Subset closure = 0;
  Subset derived = 0;
  Subset boundary = 0;
  bool operator==(const SubsetAnalysis&) const = default;
};

Subset interior(const Topology& t, Subset a);
Subset closure(const Topology& t, Subset a);
Subset derived_set(const Topology& t, Subset a);
Subset boundary(const Topology& t, Subset a);
SubsetAnalysis analyze_subset(const Topology& t, Subset a);

// f(A) for every subset A, indexed by A.
using SubsetOperator = std::vector<Subset>;

SubsetOperator closure_operator(const Topology& t);
SubsetOperator interior_operator(const Topology& t);
// g(A) = complement of f(complement of A)
SubsetOperator dual_operator(int n, const SubsetOperator& f);

// (1) f({}) = {}, (2) A inside f(A), (3) f(A u B) = f(A) u f(B), (4) f(f(A)) = f(A)
std::optional<Violation> kuratowski_violation(int n, const SubsetOperator& f);
// (1) f(X) = X, (2) f(A) inside A, (3) f(A n B) = f(A) n f(B), (4) f(f(A)) = f(A)
std::optional<Violation> interior_operator_violation(int n, const SubsetOperator& f);
Topology topology_from_closure_operator(int n, const SubsetOperator& f);
Topology topology_from_interior_operator(int n, const SubsetOperator& f);

bool is_dense(const Topology& t, Subset a);
// Finite carriers are countable, so X itself is a countable dense subset.
inline bool separable(const Topology&) { return true; }

}  // namespace topo
