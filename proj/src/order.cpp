#include "topo/order.hpp"

namespace topo {

const char* flavor_name(Flavor f) { return f == Flavor::Strict ? "strict" : "reflexive"; }

Preorder::Preorder(FiniteRelation rel, Flavor flavor) : rel_(std::move(rel)), flavor_(flavor) {
  if (!rel_.is_transitive()) throw NotPreorder("relation is not transitive");
  if (rel_.n() == 0) return;
  if (flavor_ == Flavor::Reflexive && !rel_.is_reflexive())
    throw NotPreorder("reflexive flavor needs a reflexive relation");
  if (flavor_ == Flavor::Strict && rel_.is_reflexive())
    throw NotPreorder("strict flavor needs a relation that is not reflexive");
}

Preorder Preorder::chain(int n, Flavor flavor) {
  return clusters(std::vector<int>(n, 1), flavor);
}

Preorder Preorder::clusters(const std::vector<int>& block_sizes, Flavor flavor) {
  std::vector<int> block;
  for (std::size_t b = 0; b < block_sizes.size(); ++b)
    for (int i = 0; i < block_sizes[b]; ++i) block.push_back(static_cast<int>(b));
  int n = static_cast<int>(block.size());
  FiniteRelation r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (block[x] < block[y] || (flavor == Flavor::Reflexive && block[x] == block[y])) r.add(x, y);
  return Preorder(r, flavor);
}

Preorder Preorder::fence(int n, Flavor flavor) {
  FiniteRelation r(n);
  for (int x = 0; x + 1 < n; ++x) {
    if (x % 2 == 0)
      r.add(x, x + 1);
    else
      r.add(x + 1, x);
  }
  if (flavor == Flavor::Reflexive)
    for (int x = 0; x < n; ++x) r.add(x, x);
  return Preorder(r, flavor);
}

bool has_full_domain(const Preorder& p) {
  for (int x = 0; x < p.n(); ++x)
    if (p.upper(x) == 0) return false;
  return true;
}

bool has_full_range(const Preorder& p) {
  for (int x = 0; x < p.n(); ++x)
    if (p.lower(x) == 0) return false;
  return true;
}

bool has_full_field(const Preorder& p) {
  for (int x = 0; x < p.n(); ++x)
    if (p.upper(x) == 0 && p.lower(x) == 0) return false;
  return true;
}

bool is_connective(const Preorder& p) {
  for (int x = 0; x < p.n(); ++x)
    for (int y = x + 1; y < p.n(); ++y)
      if (!p.below(x, y) && !p.below(y, x)) return false;
  return true;
}

namespace {

bool below_or_equal(const Preorder& p, int x, int y) { return x == y || p.below(x, y); }

Subset upper_bounds(const Preorder& p, Subset a) {
  Subset r = 0;
  for (int u = 0; u < p.n(); ++u) {
    bool ok = true;
    for (int x : points_of(a)) ok = ok && below_or_equal(p, x, u);
    if (ok) r |= singleton(u);
  }
  return r;
}

bool pairwise_closed(const SetSystem& s) {
  for (Subset a : s)
    for (Subset b : s)
      if (!s.has(a & b)) return false;
  return true;
}

}  // namespace

bool has_least_upper_bound_property(const Preorder& p) {
  for (Subset a = 1; a <= full_set(p.n()); ++a) {
    Subset ub = upper_bounds(p, a);
    if (ub == 0) continue;
    bool least = false;
    for (int u : points_of(ub)) {
      bool all = true;
      for (int v : points_of(ub)) all = all && below_or_equal(p, u, v);
      if (all) {
        least = true;
        break;
      }
    }
    if (!least) return false;
  }
  return true;
}

SetSystem lower_segments(const Preorder& p, Subset y) {
  std::vector<Subset> v{0};
  for (int x : points_of(y)) v.push_back(p.lower(x));
  return SetSystem(p.n(), std::move(v));
}

SetSystem upper_segments(const Preorder& p, Subset y) {
  std::vector<Subset> v{0};
  for (int x : points_of(y)) v.push_back(p.upper(x));
  return SetSystem(p.n(), std::move(v));
}

SetSystem interval_subbase(const Preorder& p, Subset y) {
  return lower_segments(p, y).merged(upper_segments(p, y));
}

bool has_interval_intersection_property(const Preorder& p) {
  Subset all = full_set(p.n());
  return pairwise_closed(lower_segments(p, all)) && pairwise_closed(upper_segments(p, all));
}

RelationReport relation_properties(const Preorder& p) {
  RelationReport r;
  r.transitive = p.relation().is_transitive();
  r.reflexive = p.relation().is_reflexive();
  r.connective = is_connective(p);
  r.full_domain = has_full_domain(p);
  r.full_range = has_full_range(p);
  r.full_field = has_full_field(p);
  r.interval_intersection = has_interval_intersection_property(p);
  r.interval_relation = r.interval_intersection && r.full_domain && r.full_range;
  r.least_upper_bound = has_least_upper_bound_property(p);
  return r;
}

bool is_order_dense(const Preorder& p, Subset y) {
  for (int x = 0; x < p.n(); ++x)
    for (int z : points_of(p.upper(x))) {
      bool found = false;
      for (int m : points_of(y))
        if (p.below(x, m) && p.below(m, z)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

Topology interval_topology(const Preorder& p) {
  if (!has_full_field(p)) throw NoFullField("some point is related to nothing");
  return generate_from_subbase(interval_subbase(p, full_set(p.n())));
}

Topology interval_topology_restricted(const Preorder& p, Subset y) {
  if (!has_full_field(p)) throw NoFullField("some point is related to nothing");
  return generate_from_subbase(interval_subbase(p, y));
}

Topology one_sided_topology(const Preorder& p, Side side) {
  Subset all = full_set(p.n());
  bool lower = side == Side::Lower;
  SetSystem seg = lower ? lower_segments(p, all) : upper_segments(p, all);
  if (lower ? has_full_domain(p) : has_full_range(p)) return generate_from_subbase(seg);
  bool total = p.n() == 0 || (p.relation().is_irreflexive() && is_connective(p));
  if (total && has_least_upper_bound_property(p)) {
    SetSystem s = seg.with(all);
    if (auto v = topology_violation(s)) throw NotATopology("segment system: " + v->detail);
    return Topology(s);
  }
  if (lower) throw MissingFullDomain("some point has nothing above it");
  throw MissingFullRange("some point has nothing below it");
}

Topology family_interval_topology(int n, const std::vector<Preorder>& family) {
  std::vector<Subset> sub{0};
  for (const auto& p : family) {
    if (p.n() != n) throw UniverseMismatch("preorder on a different carrier");
    for (int x = 0; x < n; ++x) {
      sub.push_back(p.lower(x));
      sub.push_back(p.upper(x));
    }
  }
  SetSystem s(n, std::move(sub));
  if (s.big_union() != full_set(n)) throw NoFullField("family leaves a point unrelated");
  return generate_from_subbase(s);
}

Preorder pullback(const Preorder& p, const FiniteMap& f) {
  if (f.dst_n() != p.n()) throw UniverseMismatch("map lands outside the preorder carrier");
  FiniteRelation r(f.src_n());
  for (int x = 0; x < f.src_n(); ++x)
    for (int y = 0; y < f.src_n(); ++y)
      if (p.below(f(x), f(y))) r.add(x, y);
  return Preorder(r, p.flavor());
}

std::vector<Preorder> all_preorders(int n, Flavor flavor) {
  if (n > 4) throw CapExceeded("preorder enumeration supports at most 4 points");
  std::vector<Preorder> out;
  int cells = n * n;
  for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
    FiniteRelation r(n);
    for (int c = 0; c < cells; ++c)
      if ((bits >> c) & 1u) r.add(c / n, c % n);
    if (!r.is_transitive()) continue;
    if (n > 0 && r.is_reflexive() != (flavor == Flavor::Reflexive)) continue;
    out.emplace_back(r, flavor);
  }
  return out;
}

std::optional<OneSidedGap> search_one_sided_gap(int max_n, Flavor flavor) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : all_preorders(n, flavor)) {
      if (!has_full_domain(p)) continue;
      Subset all = full_set(n);
      SetSystem s = lower_segments(p, all);
      Topology t = generate_from_subbase(s);
      if (!is_base_for(s, t)) continue;
      for (Subset y = 1; y < all; ++y) {
        SetSystem r = lower_segments(p, y);
        if (r.big_union() != all || is_order_dense(p, y)) continue;
        if (!is_base_for(r, t)) return OneSidedGap{p, y};
      }
    }
  return std::nullopt;
}

}  // namespace topo
