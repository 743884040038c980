#include "topo/closure.hpp"

#include "topo/neighborhoods.hpp"

namespace topo {

Subset interior(const Topology& t, Subset a) {
  Subset out = 0;
  for (Subset u : t.opens())
    if (is_subset(u, a)) out |= u;
  return out;
}

Subset closure(const Topology& t, Subset a) {
  Subset out = t.full();
  for (Subset c : t.closeds())
    if (is_subset(a, c)) out &= c;
  return out;
}

Subset derived_set(const Topology& t, Subset a) {
  PointSetRelation ns = neighborhood_system_of(t);
  Subset out = 0;
  for (int x = 0; x < t.n(); ++x) {
    bool acc = true;
    for (Subset u : ns.section(x))
      if (((a & u) & ~singleton(x)) == 0) {
        acc = false;
        break;
      }
    if (acc) out |= singleton(x);
  }
  return out;
}

Subset boundary(const Topology& t, Subset a) { return closure(t, a) & closure(t, complement(a, t.n())); }

SubsetAnalysis analyze_subset(const Topology& t, Subset a) {
  if (!is_subset(a, t.full())) throw ParseError("subset " + format_subset(a) + " outside carrier");
  return {interior(t, a), closure(t, a), derived_set(t, a), boundary(t, a)};
}

SubsetOperator closure_operator(const Topology& t) {
  SubsetOperator f;
  for (Subset a = 0; a <= t.full(); ++a) f.push_back(closure(t, a));
  return f;
}

SubsetOperator interior_operator(const Topology& t) {
  SubsetOperator f;
  for (Subset a = 0; a <= t.full(); ++a) f.push_back(interior(t, a));
  return f;
}

namespace {

void check_table(int n, const SubsetOperator& f) {
  check_carrier(n);
  if (f.size() != std::size_t{full_set(n)} + 1)
    throw ParseError("operator table must list all " + std::to_string(std::size_t{full_set(n)} + 1) + " subsets");
  for (Subset v : f)
    if (!is_subset(v, full_set(n))) throw ParseError("operator value outside carrier");
}

}  // namespace

SubsetOperator dual_operator(int n, const SubsetOperator& f) {
  check_table(n, f);
  SubsetOperator g(f.size());
  for (Subset a = 0; a <= full_set(n); ++a) g[a] = complement(f[complement(a, n)], n);
  return g;
}

std::optional<Violation> kuratowski_violation(int n, const SubsetOperator& f) {
  check_table(n, f);
  const Subset top = full_set(n);
  if (f[0] != 0) return Violation{1, 0, f[0], "f of the empty set is " + format_subset(f[0])};
  for (Subset a = 0; a <= top; ++a)
    if (!is_subset(a, f[a])) return Violation{2, a, f[a], format_subset(a) + " not inside its image"};
  for (Subset a = 0; a <= top; ++a)
    for (Subset b = a + 1; b <= top; ++b)
      if (f[a | b] != (f[a] | f[b])) return Violation{3, a, b, "f(A u B) differs from f(A) u f(B)"};
  for (Subset a = 0; a <= top; ++a)
    if (f[f[a]] != f[a]) return Violation{4, a, f[a], "f is not idempotent at " + format_subset(a)};
  return std::nullopt;
}

std::optional<Violation> interior_operator_violation(int n, const SubsetOperator& f) {
  check_table(n, f);
  const Subset top = full_set(n);
  if (f[top] != top) return Violation{1, top, f[top], "f(X) is " + format_subset(f[top])};
  for (Subset a = 0; a <= top; ++a)
    if (!is_subset(f[a], a)) return Violation{2, a, f[a], "image of " + format_subset(a) + " not inside it"};
  for (Subset a = 0; a <= top; ++a)
    for (Subset b = a + 1; b <= top; ++b)
      if (f[a & b] != (f[a] & f[b])) return Violation{3, a, b, "f(A n B) differs from f(A) n f(B)"};
  for (Subset a = 0; a <= top; ++a)
    if (f[f[a]] != f[a]) return Violation{4, a, f[a], "f is not idempotent at " + format_subset(a)};
  return std::nullopt;
}

Topology topology_from_closure_operator(int n, const SubsetOperator& f) {
  if (auto v = kuratowski_violation(n, f))
    throw KuratowskiViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
  std::vector<Subset> opens;
  for (Subset a = 0; a <= full_set(n); ++a)
    if (f[a] == a) opens.push_back(complement(a, n));
  return Topology(SetSystem(n, std::move(opens)));
}

Topology topology_from_interior_operator(int n, const SubsetOperator& f) {
  if (auto v = interior_operator_violation(n, f))
    throw InteriorAxiomViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
  std::vector<Subset> opens;
  for (Subset a = 0; a <= full_set(n); ++a)
    if (f[a] == a) opens.push_back(a);
  return Topology(SetSystem(n, std::move(opens)));
}

bool is_dense(const Topology& t, Subset a) { return closure(t, a) == t.full(); }

}  // namespace topo
