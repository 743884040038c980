#include "topo/setops.hpp"

#include <algorithm>
#include <sstream>

namespace topo {

std::vector<int> points_of(Subset a) {
  std::vector<int> out;
  while (a) {
    out.push_back(lowest_point(a));
    a &= a - 1;
  }
  return out;
}

Subset subset_from_points(const std::vector<int>& pts, int n) {
  Subset s = 0;
  for (int x : pts) {
    if (x < 0 || x >= n)
      throw ParseError("point " + std::to_string(x) + " outside carrier of size " + std::to_string(n));
    s |= singleton(x);
  }
  return s;
}

std::string format_subset(Subset a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : points_of(a)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

void check_carrier(int n) {
  if (n < 0 || n > kMaxCarrier)
    throw CapExceeded("carrier size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxCarrier));
}

SetSystem::SetSystem(int n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  check_carrier(n);
  const Subset x = full_set(n);
  for (Subset s : sets_)
    if (!is_subset(s, x)) throw ParseError("subset " + format_subset(s) + " has points outside the carrier");
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

SetSystem SetSystem::power_set(int n) {
  check_carrier(n);
  std::vector<Subset> all(std::size_t{1} << n);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Subset>(i);
  return SetSystem(n, std::move(all));
}

SetSystem SetSystem::from_table(int n, const std::vector<char>& table) {
  check_carrier(n);
  SetSystem out(n);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i]) out.sets_.push_back(static_cast<Subset>(i));
  return out;
}

bool SetSystem::has(Subset s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

bool SetSystem::is_subfamily_of(const SetSystem& other) const {
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end());
}

std::vector<char> SetSystem::table() const {
  std::vector<char> t(std::size_t{1} << n_, 0);
  for (Subset s : sets_) t[s] = 1;
  return t;
}

Subset SetSystem::big_union() const {
  Subset u = 0;
  for (Subset s : sets_) u |= s;
  return u;
}

Subset SetSystem::big_intersection() const {
  Subset m = full();
  for (Subset s : sets_) m &= s;
  return m;
}

SetSystem SetSystem::with(Subset s) const {
  std::vector<Subset> v = sets_;
  v.push_back(s);
  return SetSystem(n_, std::move(v));
}

SetSystem SetSystem::merged(const SetSystem& other) const {
  if (other.n_ != n_) throw UniverseMismatch("merging systems over different carriers");
  std::vector<Subset> v;
  std::set_union(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end(), std::back_inserter(v));
  SetSystem out(n_);
  out.sets_ = std::move(v);
  return out;
}

SetSystem SetSystem::intersected(const SetSystem& other) const {
  if (other.n_ != n_) throw UniverseMismatch("intersecting systems over different carriers");
  std::vector<Subset> v;
  std::set_intersection(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end(), std::back_inserter(v));
  SetSystem out(n_);
  out.sets_ = std::move(v);
  return out;
}

PointSetRelation::PointSetRelation(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
  check_carrier(n);
  for (auto& [x, a] : pairs_) {
    if (x < 0 || x >= n) throw ParseError("point " + std::to_string(x) + " outside carrier");
    if (!is_subset(a, full_set(n))) throw ParseError("subset " + format_subset(a) + " outside carrier");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PointSetRelation PointSetRelation::from_sections(const std::vector<SetSystem>& sections) {
  int n = static_cast<int>(sections.size());
  std::vector<Pair> pairs;
  for (int x = 0; x < n; ++x) {
    if (sections[x].n() != n) throw UniverseMismatch("section carrier differs from point count");
    for (Subset a : sections[x]) pairs.emplace_back(x, a);
  }
  return PointSetRelation(n, std::move(pairs));
}

bool PointSetRelation::has(int x, Subset a) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{x, a});
}

SetSystem PointSetRelation::section(int x) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
  std::vector<Subset> v;
  for (auto it = lo; it != pairs_.end() && it->first == x; ++it) v.push_back(it->second);
  return SetSystem(n_, std::move(v));
}

std::vector<SetSystem> PointSetRelation::sections() const {
  std::vector<SetSystem> out;
  for (int x = 0; x < n_; ++x) out.push_back(section(x));
  return out;
}

SetSystem PointSetRelation::image(Subset a) const {
  SetSystem out(n_);
  for (int x : points_of(a)) out = out.merged(section(x));
  return out;
}

SetSystem PointSetRelation::meet(Subset a) const {
  SetSystem out = SetSystem::power_set(n_);
  for (int x : points_of(a)) out = out.intersected(section(x));
  return out;
}

namespace {

template <class Op>
SetSystem pairwise_closure(const SetSystem& sys, Op op) {
  const int n = sys.n();
  std::vector<char> in(std::size_t{1} << n, 0);
  std::vector<Subset> out;
  for (Subset s : sys) {
    in[s] = 1;
    out.push_back(s);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subset t = op(out[i], out[j]);
      if (!in[t]) {
        in[t] = 1;
        out.push_back(t);
      }
    }
  }
  return SetSystem(n, std::move(out));
}

}  // namespace

SetSystem psi(const SetSystem& sys) {
  return pairwise_closure(sys, [](Subset a, Subset b) { return a & b; });
}

SetSystem theta(const SetSystem& sys) {
  return pairwise_closure(sys, [](Subset a, Subset b) { return a | b; });
}

SetSystem phi(const SetSystem& sys) {
  std::vector<char> t = sys.table();
  const int n = sys.n();
  for (int b = 0; b < n; ++b) {
    const Subset bit = singleton(b);
    for (std::size_t m = 0; m < t.size(); ++m)
      if (!(m & bit) && t[m]) t[m | bit] = 1;
  }
  return SetSystem::from_table(n, t);
}

PointSetRelation phi_prime(const PointSetRelation& rel) {
  std::vector<PointSetRelation::Pair> out;
  for (int x = 0; x < rel.n(); ++x)
    for (Subset b : phi(rel.section(x))) out.emplace_back(x, b);
  return PointSetRelation(rel.n(), std::move(out));
}

}  // namespace topo

#include "topo/maps.hpp"

namespace topo {

FiniteMap::FiniteMap(int src_n, int dst_n, std::vector<int> values)
    : src_n_(src_n), dst_n_(dst_n), f_(std::move(values)) {
  check_carrier(src_n);
  check_carrier(dst_n);
  if (static_cast<int>(f_.size()) != src_n)
    throw ParseError("map has " + std::to_string(f_.size()) + " values, expected " + std::to_string(src_n));
  for (int v : f_)
    if (v < 0 || v >= dst_n) throw ParseError("map value " + std::to_string(v) + " outside target carrier");
}

FiniteMap FiniteMap::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return FiniteMap(n, n, std::move(v));
}

FiniteMap FiniteMap::constant(int src_n, int dst_n, int value) {
  return FiniteMap(src_n, dst_n, std::vector<int>(src_n, value));
}

Subset FiniteMap::image(Subset a) const {
  Subset out = 0;
  for (int x : points_of(a)) out |= singleton(f_[x]);
  return out;
}

Subset FiniteMap::preimage(Subset b) const {
  Subset out = 0;
  for (int x = 0; x < src_n_; ++x)
    if (contains(b, f_[x])) out |= singleton(x);
  return out;
}

SetSystem FiniteMap::image(const SetSystem& sys) const {
  std::vector<Subset> v;
  for (Subset a : sys) v.push_back(image(a));
  return SetSystem(dst_n_, std::move(v));
}

SetSystem FiniteMap::preimage(const SetSystem& sys) const {
  std::vector<Subset> v;
  for (Subset b : sys) v.push_back(preimage(b));
  return SetSystem(src_n_, std::move(v));
}

bool FiniteMap::is_injective() const {
  Subset seen = 0;
  for (int v : f_) {
    if (contains(seen, v)) return false;
    seen |= singleton(v);
  }
  return true;
}

bool FiniteMap::is_surjective() const { return image(full_set(src_n_)) == full_set(dst_n_); }

FiniteMap FiniteMap::inverse() const {
  if (!is_bijective()) throw UniverseCardinalityMismatch("inverse of a non-bijective map");
  std::vector<int> g(src_n_);
  for (int x = 0; x < src_n_; ++x) g[f_[x]] = x;
  return FiniteMap(dst_n_, src_n_, std::move(g));
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (f.dst_n() != g.src_n()) throw UniverseMismatch("composition of maps with mismatched carriers");
  std::vector<int> v(f.src_n());
  for (int x = 0; x < f.src_n(); ++x) v[x] = g(f(x));
  return FiniteMap(f.src_n(), g.dst_n(), std::move(v));
}

FiniteRelation::FiniteRelation(int n, const std::vector<std::pair<int, int>>& pairs) : FiniteRelation(n) {
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw ParseError("relation pair (" + std::to_string(x) + "," + std::to_string(y) + ") outside carrier");
    add(x, y);
  }
}

FiniteRelation FiniteRelation::from_classes(int n, const std::vector<Subset>& classes) {
  FiniteRelation r(n);
  for (Subset c : classes)
    for (int x : points_of(c)) r.rows_[x] |= c;
  return r;
}

Subset FiniteRelation::column(int y) const {
  Subset out = 0;
  for (int x = 0; x < n_; ++x)
    if (related(x, y)) out |= singleton(x);
  return out;
}

std::vector<std::pair<int, int>> FiniteRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : points_of(rows_[x])) out.emplace_back(x, y);
  return out;
}

bool FiniteRelation::is_reflexive() const {
  for (int x = 0; x < n_; ++x)
    if (!related(x, x)) return false;
  return true;
}

bool FiniteRelation::is_irreflexive() const {
  for (int x = 0; x < n_; ++x)
    if (related(x, x)) return false;
  return true;
}

bool FiniteRelation::is_symmetric() const {
  for (int x = 0; x < n_; ++x)
    for (int y : points_of(rows_[x]))
      if (!related(y, x)) return false;
  return true;
}

bool FiniteRelation::is_transitive() const {
  for (int x = 0; x < n_; ++x)
    for (int y : points_of(rows_[x]))
      if (!is_subset(rows_[y], rows_[x])) return false;
  return true;
}

std::vector<Subset> FiniteRelation::classes() const {
  std::vector<Subset> out;
  Subset seen = 0;
  for (int x = 0; x < n_; ++x) {
    if (contains(seen, x)) continue;
    out.push_back(rows_[x]);
    seen |= rows_[x];
  }
  return out;
}

}  // namespace topo
