#include "topo/continuity.hpp"

#include <algorithm>

#include "topo/closure.hpp"
#include "topo/convergence.hpp"
#include "topo/neighborhoods.hpp"

namespace topo {

SpaceMap::SpaceMap(Topology s, Topology d, FiniteMap fm) : src(std::move(s)), dst(std::move(d)), f(std::move(fm)) {
  if (f.src_n() != src.n() || f.dst_n() != dst.n()) throw UniverseMismatch("map carriers differ from the spaces");
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.dst == g.src)) throw UniverseMismatch("composition through different middle spaces");
  return SpaceMap(f.src, g.dst, compose(g.f, f.f));
}

bool is_continuous(const SpaceMap& m) { return continuity::by_open_preimages(m); }

bool is_continuous_at(const SpaceMap& m, int x) { return continuity::local_by_neighborhoods(m, x); }

bool open_preimages_at(const SpaceMap& m, int x) {
  for (Subset v : m.dst.opens())
    if (contains(v, m.f(x)) && !m.src.is_open(m.f.preimage(v))) return false;
  return true;
}

SetSystem minimal_open_base(const Topology& t) {
  std::vector<Subset> v{0};
  for (int x = 0; x < t.n(); ++x) {
    Subset m = t.full();
    for (Subset u : t.opens())
      if (contains(u, x)) m &= u;
    v.push_back(m);
  }
  return SetSystem(t.n(), std::move(v));
}

namespace continuity {

bool by_open_preimages(const SpaceMap& m) {
  for (Subset v : m.dst.opens())
    if (!m.src.is_open(m.f.preimage(v))) return false;
  return true;
}

bool by_subbase_preimages(const SpaceMap& m, const SetSystem& target_subbase) {
  for (Subset s : target_subbase)
    if (!m.src.is_open(m.f.preimage(s))) return false;
  return true;
}

bool by_closed_preimages(const SpaceMap& m) {
  for (Subset c : m.dst.closeds())
    if (!m.src.is_closed(m.f.preimage(c))) return false;
  return true;
}

bool by_pointwise_neighborhoods(const SpaceMap& m) {
  for (int x = 0; x < m.src.n(); ++x)
    if (!local_by_neighborhoods(m, x)) return false;
  return true;
}

bool by_filter_transfer(const SpaceMap& m) {
  for (int x = 0; x < m.src.n(); ++x)
    if (!local_by_filter_transfer(m, x)) return false;
  return true;
}

bool by_closure_images(const SpaceMap& m) {
  for (Subset a = 0; a <= m.src.full(); ++a)
    if (!is_subset(m.f.image(closure(m.src, a)), closure(m.dst, m.f.image(a)))) return false;
  return true;
}

bool by_closure_preimages(const SpaceMap& m) {
  for (Subset b = 0; b <= m.dst.full(); ++b)
    if (!is_subset(closure(m.src, m.f.preimage(b)), m.f.preimage(closure(m.dst, b)))) return false;
  return true;
}

bool by_interior_preimages(const SpaceMap& m) {
  for (Subset b = 0; b <= m.dst.full(); ++b)
    if (!is_subset(m.f.preimage(interior(m.dst, b)), interior(m.src, m.f.preimage(b)))) return false;
  return true;
}

bool by_nets(const SpaceMap& m) {
  for (int x = 0; x < m.src.n(); ++x)
    if (!local_by_nets(m, x)) return false;
  return true;
}

bool local_by_subbase(const SpaceMap& m, int x, const SetSystem& target_subbase, const SetSystem& nbhd_base_at_x) {
  std::vector<Subset> at;
  for (Subset s : target_subbase)
    if (contains(s, m.f(x))) at.push_back(s);
  return phi_finer(m.f.image(nbhd_base_at_x), SetSystem(m.dst.n(), std::move(at)));
}

bool local_by_neighborhoods(const SpaceMap& m, int x) {
  PointSetRelation nx = neighborhood_system_of(m.src);
  PointSetRelation ny = neighborhood_system_of(m.dst);
  for (Subset v : ny.section(m.f(x)))
    if (!nx.has(x, m.f.preimage(v))) return false;
  return true;
}

bool local_by_filter_transfer(const SpaceMap& m, int x) {
  SetSystem nx = neighborhood_system_of(m.src).section(x);
  SetSystem ny = neighborhood_system_of(m.dst).section(m.f(x));
  return phi_finer(m.f.image(nx), ny);
}

bool local_by_filter_bases(const SpaceMap& m, int x) {
  // every filter here is principal, so single-member bases reach all of them
  for (Subset a = 1; a <= m.src.full(); ++a) {
    SetSystem base(m.src.n(), {a});
    if (!contains(filter_base_limits(m.src, base).lim, x)) continue;
    if (!contains(filter_base_limits(m.dst, m.f.image(base)).lim, m.f(x))) return false;
  }
  return true;
}

bool local_by_nets(const SpaceMap& m, int x) {
  for (Subset a = 1; a <= m.src.full(); ++a) {
    Net net = net_from_filterbase(FilterBase(SetSystem(m.src.n(), {a})));
    if (!contains(net_limits(m.src, net).lim, x)) continue;
    if (!contains(net_limits(m.dst, map_net(net, m.f)).lim, m.f(x))) return false;
  }
  return true;
}

}  // namespace continuity

std::vector<NamedResult> global_characterizations(const SpaceMap& m) {
  using namespace continuity;
  return {
      {"open-preimages", by_open_preimages(m)},
      {"subbase-preimages", by_subbase_preimages(m, minimal_open_base(m.dst))},
      {"closed-preimages", by_closed_preimages(m)},
      {"pointwise-neighborhoods", by_pointwise_neighborhoods(m)},
      {"filter-transfer", by_filter_transfer(m)},
      {"closure-images", by_closure_images(m)},
      {"closure-preimages", by_closure_preimages(m)},
      {"interior-preimages", by_interior_preimages(m)},
      {"nets", by_nets(m)},
  };
}

OpenClosed map_open_closed(const SpaceMap& m) {
  OpenClosed r{true, true};
  for (Subset u : m.src.opens())
    if (!m.dst.is_open(m.f.image(u))) {
      r.open = false;
      break;
    }
  for (Subset c : m.src.closeds())
    if (!m.dst.is_closed(m.f.image(c))) {
      r.closed = false;
      break;
    }
  return r;
}

bool open_by_base(const SpaceMap& m, const SetSystem& source_base) {
  for (Subset b : source_base)
    if (!m.dst.is_open(m.f.image(b))) return false;
  return true;
}

bool is_homeomorphism(const SpaceMap& m) {
  if (!m.f.is_bijective()) return false;
  return is_continuous(m) && is_continuous(SpaceMap(m.dst, m.src, m.f.inverse()));
}

namespace {

std::vector<int> open_degrees(const Topology& t) {
  std::vector<int> d(t.n(), 0);
  for (Subset u : t.opens())
    for (int x : points_of(u)) ++d[x];
  return d;
}

}  // namespace

std::optional<FiniteMap> are_homeomorphic(const Topology& a, const Topology& b) {
  if (a.n() != b.n()) throw UniverseCardinalityMismatch("carriers have " + std::to_string(a.n()) + " and " +
                                                        std::to_string(b.n()) + " points");
  if (a.n() > 6) throw CapExceeded("homeomorphism search supports at most 6 points");
  if (a.opens().size() != b.opens().size()) return std::nullopt;
  std::vector<int> da = open_degrees(a), db = open_degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> perm(a.n());
  for (int i = 0; i < a.n(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int x = 0; x < a.n() && ok; ++x) ok = da[x] == db[perm[x]];
    if (!ok) continue;
    FiniteMap f(a.n(), b.n(), perm);
    if (f.image(a.opens()) == b.opens()) return f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool filter_continuity_at(const Filter& fx, const Filter& fy, const SpaceMap& m, int x) {
  if (fx.n() != m.src.n() || fy.n() != m.dst.n()) throw UniverseMismatch("filters on the wrong carriers");
  if (!contains(cluster_points(fx), x))
    throw ClusterPreconditionFailed(std::to_string(x) + " is not a cluster point of the source filter");
  if (!contains(cluster_points(fy), m.f(x)))
    throw ClusterPreconditionFailed(std::to_string(m.f(x)) + " is not a cluster point of the target filter");
  return phi_finer(m.f.image(fx.members()), fy.members());
}

}  // namespace topo
