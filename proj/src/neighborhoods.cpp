#include "topo/neighborhoods.hpp"

#include "topo/filters.hpp"

namespace topo {

PointSetRelation neighborhood_system_of(const Topology& t) {
  std::vector<SetSystem> sections;
  for (int x = 0; x < t.n(); ++x) {
    std::vector<Subset> around;
    for (Subset u : t.opens())
      if (contains(u, x)) around.push_back(u);
    sections.push_back(phi(SetSystem(t.n(), std::move(around))));
  }
  if (t.n() == 0) return PointSetRelation(0);
  return PointSetRelation::from_sections(sections);
}

namespace {

PointSetRelation restrict_to(const PointSetRelation& rel, const SetSystem& allowed) {
  std::vector<PointSetRelation::Pair> v;
  for (const auto& p : rel.pairs())
    if (allowed.has(p.second)) v.push_back(p);
  return PointSetRelation(rel.n(), std::move(v));
}

Violation point_violation(int axiom, int x, Subset a, Subset b, const std::string& detail) {
  Violation v{axiom, a, b, detail};
  v.point = x;
  return v;
}

}  // namespace

PointSetRelation open_neighborhoods(const Topology& t) { return restrict_to(neighborhood_system_of(t), t.opens()); }

PointSetRelation closed_neighborhoods(const Topology& t) {
  return restrict_to(neighborhood_system_of(t), t.closeds());
}

SetSystem neighborhoods_of_set(const PointSetRelation& ns, Subset a) { return ns.meet(a); }

std::optional<Violation> neighborhood_violation(const PointSetRelation& rel) {
  const int n = rel.n();
  const auto sec = rel.sections();
  for (int x = 0; x < n; ++x)
    if (sec[x].empty()) return point_violation(1, x, 0, 0, "no neighborhood of " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x])
      if (!contains(u, x))
        return point_violation(2, x, u, 0, format_subset(u) + " does not contain " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x])
      for (int y = 0; y < n; ++y)
        if (!sec[x].has(u | singleton(y)))
          return point_violation(3, x, u, u | singleton(y), "superset " + format_subset(u | singleton(y)) + " missing");
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x])
      for (Subset v : sec[x])
        if (!sec[x].has(u & v))
          return point_violation(4, x, u, v, "intersection of " + format_subset(u) + " and " + format_subset(v) + " missing");
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x]) {
      bool found = false;
      for (Subset v : sec[x]) {
        bool all = true;
        for (int y : points_of(v))
          if (!sec[y].has(u)) {
            all = false;
            break;
          }
        if (all) {
          found = true;
          break;
        }
      }
      if (!found)
        return point_violation(5, x, u, 0, "no inner neighborhood for " + format_subset(u) + " at " + std::to_string(x));
    }
  return std::nullopt;
}

Topology topology_from_neighborhood_relation(const PointSetRelation& rel) {
  if (auto v = neighborhood_violation(rel))
    throw NeighborhoodAxiomViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
  std::vector<Subset> opens;
  for (Subset u = 0; u <= full_set(rel.n()); ++u) {
    bool ok = true;
    for (int x : points_of(u))
      if (!rel.has(x, u)) {
        ok = false;
        break;
      }
    if (ok) opens.push_back(u);
  }
  return Topology(SetSystem(rel.n(), std::move(opens)));
}

SetMap set_neighborhood_map(const Topology& t) {
  PointSetRelation ns = neighborhood_system_of(t);
  SetMap m;
  for (Subset a = 0; a <= t.full(); ++a) m.push_back(neighborhoods_of_set(ns, a));
  return m;
}

std::optional<Violation> set_map_violation(int n, const SetMap& m) {
  check_carrier(n);
  const Subset top = full_set(n);
  if (m.size() != std::size_t{top} + 1)
    throw ParseError("set map must list all " + std::to_string(std::size_t{top} + 1) + " subsets");
  for (Subset a = 0; a <= top; ++a)
    for (Subset u : m[a])
      if (!is_subset(a, u)) return Violation{1, a, u, format_subset(a) + " not inside " + format_subset(u)};
  for (Subset a = 0; a <= top; ++a)
    for (Subset u : m[a])
      for (int y = 0; y < n; ++y)
        if (!m[a].has(u | singleton(y)))
          return Violation{2, a, u | singleton(y), "superset " + format_subset(u | singleton(y)) + " missing"};
  for (Subset a = 0; a <= top; ++a)
    for (Subset u : m[a])
      for (Subset v : m[a])
        if (!m[a].has(u & v)) return Violation{3, a, u & v, "intersection " + format_subset(u & v) + " missing"};
  for (Subset a = 0; a <= top; ++a)
    for (Subset u : m[a]) {
      bool found = false;
      for (Subset v : m[a])
        if (m[v].has(u)) {
          found = true;
          break;
        }
      if (!found) return Violation{4, a, u, "no inner set for " + format_subset(u)};
    }
  for (Subset a = 0; a <= top; ++a)
    for (Subset b = a + 1; b <= top; ++b)
      if (m[a | b] != m[a].intersected(m[b]))
        return Violation{5, a, b, "M(A u B) differs from M(A) n M(B)"};
  if (m[0] != SetSystem::power_set(n)) return Violation{6, 0, 0, "M of the empty set is not the power set"};
  for (Subset a = 0; a <= top; ++a)
    if (m[a].empty()) return Violation{7, a, 0, "M(" + format_subset(a) + ") is empty"};
  return std::nullopt;
}

Topology topology_from_set_neighborhood_map(int n, const SetMap& m) {
  if (auto v = set_map_violation(n, m))
    throw SetMapAxiomViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
  std::vector<Subset> opens;
  for (Subset u = 0; u <= full_set(n); ++u) {
    bool ok = true;
    for (Subset a = 0; a <= u && ok; ++a)
      if (is_subset(a, u) && !m[a].has(u)) ok = false;
    if (ok) opens.push_back(u);
  }
  return Topology(SetSystem(n, std::move(opens)));
}

std::optional<Violation> neighborhood_base_violation(const PointSetRelation& rel) {
  const int n = rel.n();
  const auto sec = rel.sections();
  for (int x = 0; x < n; ++x)
    if (sec[x].empty()) return point_violation(1, x, 0, 0, "no base member at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x])
      if (!contains(u, x))
        return point_violation(2, x, u, 0, format_subset(u) + " does not contain " + std::to_string(x));
  auto has_inside = [](const SetSystem& s, Subset bound) {
    for (Subset w : s)
      if (is_subset(w, bound)) return true;
    return false;
  };
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x])
      for (Subset v : sec[x])
        if (!has_inside(sec[x], u & v))
          return point_violation(3, x, u, v, "no member inside " + format_subset(u & v));
  for (int x = 0; x < n; ++x)
    for (Subset u : sec[x]) {
      bool found = false;
      for (Subset v : sec[x]) {
        bool all = true;
        for (int y : points_of(v))
          if (!has_inside(sec[y], u)) {
            all = false;
            break;
          }
        if (all) {
          found = true;
          break;
        }
      }
      if (!found) return point_violation(4, x, u, 0, "no inner member for " + format_subset(u));
    }
  return std::nullopt;
}

bool is_neighborhood_base_of(const PointSetRelation& rel, const Topology& t) {
  PointSetRelation ns = neighborhood_system_of(t);
  for (const auto& [x, u] : rel.pairs())
    if (!ns.has(x, u)) return false;
  return phi_prime(rel) == ns;
}

PointSetRelation neighborhood_base_from_topological_base(const SetSystem& base, const Topology& t) {
  if (!is_base_for(base, t)) throw NotABase("system is not a base for the topology");
  std::vector<PointSetRelation::Pair> v;
  for (Subset u : base)
    for (int x : points_of(u)) v.emplace_back(x, u);
  return PointSetRelation(t.n(), std::move(v));
}

Topology topology_from_neighborhood_base(const PointSetRelation& rel) {
  if (auto v = neighborhood_base_violation(rel))
    throw NeighborhoodAxiomViolation("base axiom (" + std::to_string(v->axiom) + "): " + v->detail);
  return topology_from_neighborhood_relation(phi_prime(rel));
}

std::optional<ClosedBaseGap> closed_neighborhood_gap(const Topology& t) {
  PointSetRelation ns = neighborhood_system_of(t);
  PointSetRelation cl = closed_neighborhoods(t);
  for (Subset a = 0; a <= t.full(); ++a)
    if (phi(cl.meet(a)) != ns.meet(a)) return ClosedBaseGap{t, a};
  return std::nullopt;
}

}  // namespace topo
