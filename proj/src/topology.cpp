#include "topo/topology.hpp"

namespace topo {

namespace {

std::optional<Violation> pairwise_violation(const SetSystem& sys, int axiom, bool unions) {
  const auto& v = sys.sets();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Subset c = unions ? (v[i] | v[j]) : (v[i] & v[j]);
      if (!sys.has(c))
        return Violation{axiom, v[i], v[j],
                         std::string(unions ? "union" : "intersection") + " of " + format_subset(v[i]) +
                             " and " + format_subset(v[j]) + " missing"};
    }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> topology_violation(const SetSystem& sys) {
  if (!sys.has(0)) return Violation{1, 0, 0, "empty set missing"};
  if (!sys.has(sys.full())) return Violation{1, sys.full(), 0, "X missing"};
  if (auto v = pairwise_violation(sys, 2, true)) return v;
  return pairwise_violation(sys, 3, false);
}

Topology::Topology(SetSystem opens) : opens_(std::move(opens)) {
  if (auto v = topology_violation(opens_))
    throw NotATopology("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
}

Topology Topology::discrete(int n) { return Topology(SetSystem::power_set(n)); }

Topology Topology::indiscrete(int n) { return Topology(SetSystem(n, {0, full_set(n)})); }

Topology Topology::cofinite(int n) {
  std::vector<Subset> v{0};
  for (Subset s = 0; s <= full_set(n); ++s)
    if (points_of(complement(s, n)).size() <= static_cast<std::size_t>(n)) v.push_back(s);
  return Topology(SetSystem(n, std::move(v)));
}

Topology Topology::sierpinski() { return Topology(SetSystem(2, {0, 1, 3})); }

SetSystem Topology::closeds() const { return complements(opens_); }

SetSystem complements(const SetSystem& sys) {
  std::vector<Subset> v;
  for (Subset s : sys) v.push_back(complement(s, sys.n()));
  return SetSystem(sys.n(), std::move(v));
}

std::optional<Violation> closed_system_violation(const SetSystem& sys) {
  if (!sys.has(0)) return Violation{1, 0, 0, "empty set missing"};
  if (!sys.has(sys.full())) return Violation{1, sys.full(), 0, "X missing"};
  if (auto v = pairwise_violation(sys, 2, false)) return v;
  return pairwise_violation(sys, 3, true);
}

ClosedSystem::ClosedSystem(SetSystem closeds) : closeds_(std::move(closeds)) {
  if (auto v = closed_system_violation(closeds_))
    throw ClosedAxiomViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
}

ClosedSystem closed_system(const Topology& t) { return ClosedSystem(t.closeds()); }

Topology topology_from_closed(const ClosedSystem& c) { return Topology(complements(c.closeds())); }

std::optional<Violation> base_violation(const SetSystem& base) {
  if (!base.has(0)) return Violation{1, 0, 0, "empty set missing"};
  if (base.big_union() != base.full()) return Violation{2, base.big_union(), 0, "union of members is not X"};
  const auto& v = base.sets();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Subset c = v[i] & v[j];
      Subset u = 0;
      for (Subset b : v)
        if (is_subset(b, c)) u |= b;
      if (u != c)
        return Violation{3, v[i], v[j],
                         "intersection of " + format_subset(v[i]) + " and " + format_subset(v[j]) +
                             " is not a union of members"};
    }
  return std::nullopt;
}

Topology generate_from_base(const SetSystem& base) {
  if (auto v = base_violation(base))
    throw BaseCriterionViolation("criterion (" + std::to_string(v->axiom) + "): " + v->detail);
  return Topology(theta(base));
}

bool is_base_for(const SetSystem& base, const Topology& t) {
  return base.n() == t.n() && !base_violation(base) && theta(base) == t.opens();
}

std::optional<Violation> subbase_violation(const SetSystem& sub) {
  if (sub.empty()) return Violation{1, 0, 0, "subbase is empty"};
  if (sub.big_union() != sub.full()) return Violation{2, sub.big_union(), 0, "union of members is not X"};
  if (!psi(sub).has(0)) return Violation{3, 0, 0, "finite intersections never reach the empty set"};
  return std::nullopt;
}

Topology generate_from_subbase(const SetSystem& sub) {
  if (auto v = subbase_violation(sub))
    throw SubbaseCriterionViolation("criterion (" + std::to_string(v->axiom) + "): " + v->detail);
  return Topology(theta(psi(sub)));
}

Comparison compare(const Topology& t1, const Topology& t2) {
  if (t1.n() != t2.n()) throw UniverseMismatch("comparing topologies on different carriers");
  bool fine = is_finer(t1, t2);
  bool coarse = is_finer(t2, t1);
  if (fine && coarse) return Comparison::Equal;
  if (fine) return Comparison::StrictlyFiner;
  if (coarse) return Comparison::StrictlyCoarser;
  return Comparison::Incomparable;
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::StrictlyFiner: return "strictly finer";
    case Comparison::StrictlyCoarser: return "strictly coarser";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace topo
