#include "topo/generated.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace topo {

void validate_family(const GeneratingFamily& fam) {
  check_carrier(fam.n);
  for (const auto& [f, t] : fam.pairs) {
    bool ok = fam.direction == Direction::Inverse ? f.src_n() == fam.n && f.dst_n() == t.n()
                                                   : f.dst_n() == fam.n && f.src_n() == t.n();
    if (!ok) throw UniverseMismatch("family map does not fit its carriers");
  }
}

Topology inverse_image_topology(const GeneratingFamily& fam) {
  validate_family(fam);
  std::vector<Subset> sub{0, full_set(fam.n)};
  for (const auto& [f, t] : fam.pairs)
    for (Subset u : t.opens()) sub.push_back(f.preimage(u));
  return Topology(theta(psi(SetSystem(fam.n, std::move(sub)))));
}

Topology direct_image_topology(const GeneratingFamily& fam) {
  validate_family(fam);
  std::vector<Subset> opens;
  for (Subset b = 0; b <= full_set(fam.n); ++b) {
    bool ok = true;
    for (const auto& [f, t] : fam.pairs)
      if (!t.is_open(f.preimage(b))) {
        ok = false;
        break;
      }
    if (ok) opens.push_back(b);
  }
  return Topology(SetSystem(fam.n, std::move(opens)));
}

Topology generated_topology(const GeneratingFamily& fam) {
  return fam.direction == Direction::Inverse ? inverse_image_topology(fam) : direct_image_topology(fam);
}

namespace {

GeneratingFamily identity_family(Direction d, int n, const std::vector<Topology>& ts) {
  GeneratingFamily fam{d, n, {}};
  for (const auto& t : ts) fam.pairs.emplace_back(FiniteMap::identity(n), t);
  return fam;
}

}  // namespace

Topology supremum(int n, const std::vector<Topology>& ts) {
  return inverse_image_topology(identity_family(Direction::Inverse, n, ts));
}

Topology infimum(int n, const std::vector<Topology>& ts) {
  return direct_image_topology(identity_family(Direction::Direct, n, ts));
}

Subset restrict_to(const Subspace& s, Subset b) {
  Subset r = 0;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (contains(b, s.points[i])) r |= singleton(static_cast<int>(i));
  return r;
}

Subset lift_from(const Subspace& s, Subset b) {
  Subset r = 0;
  for (int i : points_of(b)) r |= singleton(s.points[i]);
  return r;
}

Subspace subspace_topology(const Topology& t, Subset a) {
  Subspace s;
  s.points = points_of(a & t.full());
  std::vector<Subset> opens;
  for (Subset u : t.opens()) opens.push_back(restrict_to(s, u));
  s.t = Topology(SetSystem(static_cast<int>(s.points.size()), std::move(opens)));
  return s;
}

int product_index(const std::vector<Topology>& ts, const std::vector<int>& coord) {
  if (coord.size() != ts.size()) throw UniverseMismatch("coordinate tuple has the wrong length");
  int idx = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (coord[i] < 0 || coord[i] >= ts[i].n()) throw UniverseMismatch("coordinate outside its factor");
    idx = idx * ts[i].n() + coord[i];
  }
  return idx;
}

namespace {

int product_size(const std::vector<Topology>& ts) {
  long long total = 1;
  for (const auto& t : ts) {
    total *= t.n();
    if (total > kMaxCarrier) throw CapExceeded("product has more than 20 points");
  }
  return static_cast<int>(total);
}

std::vector<std::vector<int>> product_coords(const std::vector<Topology>& ts, int total) {
  std::vector<std::vector<int>> coords(total, std::vector<int>(ts.size()));
  for (int p = 0; p < total; ++p) {
    int r = p;
    for (std::size_t i = ts.size(); i-- > 0;) {
      coords[p][i] = r % ts[i].n();
      r /= ts[i].n();
    }
  }
  return coords;
}

}  // namespace

Subset box(const std::vector<Topology>& ts, const std::vector<Subset>& sides) {
  if (sides.size() != ts.size()) throw UniverseMismatch("box has the wrong number of sides");
  int total = product_size(ts);
  auto coords = product_coords(ts, total);
  Subset r = 0;
  for (int p = 0; p < total; ++p) {
    bool in = true;
    for (std::size_t i = 0; i < ts.size() && in; ++i) in = contains(sides[i], coords[p][i]);
    if (in) r |= singleton(p);
  }
  return r;
}

Product product_topology(const std::vector<Topology>& ts) {
  int total = product_size(ts);
  Product prod;
  prod.coords = product_coords(ts, total);
  GeneratingFamily fam{Direction::Inverse, total, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::vector<int> v(total);
    for (int p = 0; p < total; ++p) v[p] = prod.coords[p][i];
    prod.projections.emplace_back(total, ts[i].n(), std::move(v));
    fam.pairs.emplace_back(prod.projections.back(), ts[i]);
  }
  prod.t = inverse_image_topology(fam);
  return prod;
}

Quotient quotient_topology(const Topology& t, const FiniteRelation& eq) {
  if (eq.n() != t.n()) throw UniverseMismatch("relation and space have different carriers");
  if (!eq.is_equivalence()) throw NotEquivalence("relation is not an equivalence");
  Quotient q;
  q.classes = eq.classes();
  std::vector<int> v(t.n());
  for (std::size_t c = 0; c < q.classes.size(); ++c)
    for (int x : points_of(q.classes[c])) v[x] = static_cast<int>(c);
  int k = static_cast<int>(q.classes.size());
  q.class_map = FiniteMap(t.n(), k, std::move(v));
  q.t = direct_image_topology(GeneratingFamily{Direction::Direct, k, {{q.class_map, t}}});
  return q;
}

Product function_space(int m, const Topology& y) {
  return product_topology(std::vector<Topology>(m, y));
}

namespace {

// Every map {0..a-1} -> {0..b-1}, lexicographic.
std::vector<FiniteMap> all_maps(int a, int b) {
  std::vector<FiniteMap> out;
  if (b == 0 && a > 0) return out;
  std::vector<int> v(a, 0);
  while (true) {
    out.emplace_back(a, b, v);
    int i = a - 1;
    while (i >= 0 && ++v[i] == b) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

bool continuous(const Topology& s, const Topology& d, const FiniteMap& f) {
  for (Subset u : d.opens())
    if (!s.is_open(f.preimage(u))) return false;
  return true;
}

std::optional<FiniteMap> first_failure(const GeneratingFamily& fam, const Topology& cand, const Topology& z) {
  if (fam.direction == Direction::Inverse) {
    for (const FiniteMap& g : all_maps(z.n(), fam.n)) {
      bool all = true;
      for (const auto& [f, t] : fam.pairs)
        if (!continuous(z, t, compose(f, g))) {
          all = false;
          break;
        }
      if (continuous(z, cand, g) != all) return g;
    }
  } else {
    for (const FiniteMap& g : all_maps(fam.n, z.n())) {
      bool all = true;
      for (const auto& [f, t] : fam.pairs)
        if (!continuous(t, z, compose(g, f))) {
          all = false;
          break;
        }
      if (continuous(cand, z, g) != all) return g;
    }
  }
  return std::nullopt;
}

}  // namespace

UniversalCheck check_universal_property(const GeneratingFamily& fam, const Topology& candidate, int z_cap) {
  if (z_cap < 1 || z_cap > 3) throw CapExceeded("test spaces are limited to at most 3 points");
  validate_family(fam);
  if (candidate.n() != fam.n) throw UniverseMismatch("candidate lives on a different carrier");
  std::vector<Topology> zs;
  for (int k = 1; k <= z_cap; ++k)
    for (auto& t : enumerate_topologies(k)) zs.push_back(std::move(t));

  std::vector<std::optional<FiniteMap>> found(zs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < zs.size();) found[i] = first_failure(fam, candidate, zs[i]);
    });
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < zs.size(); ++i)
    if (found[i]) return UniversalCheck{false, UniversalWitness{zs[i], *found[i]}};
  return {};
}

bool is_embedding(const SpaceMap& m) {
  if (!m.f.is_injective()) return false;
  return m.src == inverse_image_topology(GeneratingFamily{Direction::Inverse, m.src.n(), {{m.f, m.dst}}});
}

}  // namespace topo
