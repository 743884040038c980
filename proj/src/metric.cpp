#include "topo/metric.hpp"

#include <algorithm>
#include <set>

namespace topo {

const char* metric_kind_name(MetricKind k) {
  switch (k) {
    case MetricKind::Pseudo: return "pseudo";
    case MetricKind::Metric: return "metric";
    case MetricKind::Invalid: return "invalid";
  }
  return "?";
}

MetricValidation validate_pseudometric(const Matrix& d) {
  int n = static_cast<int>(d.size());
  if (n > kMaxCarrier) return {MetricKind::Invalid, "more than 20 points", {}};
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(d[x].size()) != n) return {MetricKind::Invalid, "matrix is not square", {x}};
  for (int x = 0; x < n; ++x) {
    if (d[x][x] != 0) return {MetricKind::Invalid, "nonzero diagonal", {x, x}};
    for (int y = 0; y < n; ++y) {
      if (d[x][y] < 0) return {MetricKind::Invalid, "negative distance", {x, y}};
      if (d[x][y] != d[y][x]) return {MetricKind::Invalid, "not symmetric", {x, y}};
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (d[x][z] > d[x][y] + d[y][z]) return {MetricKind::Invalid, "triangle inequality fails", {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && d[x][y] == 0) return {MetricKind::Pseudo, "", {}};
  return {MetricKind::Metric, "", {}};
}

PseudoMetric::PseudoMetric(Matrix d) : d_(std::move(d)) {
  auto v = validate_pseudometric(d_);
  if (v.kind == MetricKind::Invalid) {
    std::string w;
    for (int i : v.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
    throw InvalidMetric(v.reason + (w.empty() ? "" : " at (" + w + ")"));
  }
}

PseudoMetric PseudoMetric::zero(int n) { return PseudoMetric(Matrix(n, std::vector<Rational>(n, 0))); }

PseudoMetric PseudoMetric::discrete(int n) {
  Matrix d(n, std::vector<Rational>(n, 1));
  for (int x = 0; x < n; ++x) d[x][x] = 0;
  return PseudoMetric(std::move(d));
}

bool PseudoMetric::is_metric() const { return validate_pseudometric(d_).kind == MetricKind::Metric; }

Subset open_sphere(const PseudoMetric& m, int x, const Rational& r) {
  Subset s = 0;
  for (int y = 0; y < m.n(); ++y)
    if (m(x, y) < r) s |= singleton(y);
  return s;
}

Subset closed_sphere(const PseudoMetric& m, int x, const Rational& r) {
  Subset s = 0;
  for (int y = 0; y < m.n(); ++y)
    if (m(x, y) <= r) s |= singleton(y);
  return s;
}

namespace {

std::set<Rational> positive_distances(const PseudoMetric& m) {
  std::set<Rational> s;
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      if (m(x, y) > 0) s.insert(m(x, y));
  return s;
}

}  // namespace

std::vector<Rational> primary_radii(const PseudoMetric& m) {
  auto s = positive_distances(m);
  Rational top = s.empty() ? Rational(0) : *s.rbegin();
  std::vector<Rational> r(s.begin(), s.end());
  r.push_back(top + 1);
  return r;
}

std::vector<Rational> dense_radii(const PseudoMetric& m) {
  auto s = positive_distances(m);
  Rational top = s.empty() ? Rational(0) : *s.rbegin();
  std::set<Rational> r;
  for (int k = 1; Rational(k, 2) <= top + 1; ++k) r.insert(Rational(k, 2));
  if (!s.empty()) r.insert(*s.begin() / 2);
  return {r.begin(), r.end()};
}

Topology metric_topology(const PseudoMetric& m) { return metric_topology(m, primary_radii(m)); }

Topology metric_topology(const PseudoMetric& m, const std::vector<Rational>& radii) {
  std::vector<Subset> base{0};
  for (int x = 0; x < m.n(); ++x)
    for (const auto& r : radii) base.push_back(open_sphere(m, x, r));
  return Topology(theta(SetSystem(m.n(), std::move(base))));
}

BoundedPair bounded_equivalents(const PseudoMetric& m) {
  Matrix e = m.matrix(), f = m.matrix();
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y) {
      e[x][y] = std::min(m(x, y), Rational(1));
      f[x][y] = m(x, y) / (1 + m(x, y));
    }
  return {PseudoMetric(std::move(e)), PseudoMetric(std::move(f))};
}

FiniteRelation zero_distance_relation(const PseudoMetric& m) {
  FiniteRelation r(m.n());
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      if (m(x, y) == 0) r.add(x, y);
  return r;
}

MetricQuotient quotient_metric(const PseudoMetric& m) {
  MetricQuotient q;
  q.classes = zero_distance_relation(m).classes();
  int k = static_cast<int>(q.classes.size());
  std::vector<int> v(m.n());
  std::vector<int> rep(k);
  for (int c = 0; c < k; ++c) {
    rep[c] = lowest_point(q.classes[c]);
    for (int x : points_of(q.classes[c])) v[x] = c;
  }
  q.class_map = FiniteMap(m.n(), k, std::move(v));
  Matrix d(k, std::vector<Rational>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) d[a][b] = m(rep[a], rep[b]);
  q.d = PseudoMetric(std::move(d));
  return q;
}

std::vector<Rational> distance_to_set(const PseudoMetric& m, Subset a) {
  a &= full_set(m.n());
  if (a == 0) throw EmptyArgument("distance to the empty set");
  std::vector<Rational> out(m.n());
  auto pts = points_of(a);
  for (int x = 0; x < m.n(); ++x) {
    out[x] = m(pts[0], x);
    for (int p : pts) out[x] = std::min(out[x], m(p, x));
  }
  return out;
}

Subset zero_distance_set(const PseudoMetric& m, Subset a) {
  auto d = distance_to_set(m, a);
  Subset s = 0;
  for (int x = 0; x < m.n(); ++x)
    if (d[x] == 0) s |= singleton(x);
  return s;
}

PseudoMetric restrict_metric(const PseudoMetric& m, Subset a) {
  auto pts = points_of(a & full_set(m.n()));
  Matrix d(pts.size(), std::vector<Rational>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) d[i][j] = m(pts[i], pts[j]);
  return PseudoMetric(std::move(d));
}

PseudoMetric sup_metric(int k, const PseudoMetric& m) {
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= m.n();
    if (total > kMaxCarrier) throw CapExceeded("function space has more than 20 points");
  }
  int t = static_cast<int>(total);
  std::vector<std::vector<int>> vals(t, std::vector<int>(k));
  for (int p = 0; p < t; ++p) {
    int r = p;
    for (int i = k; i-- > 0;) {
      vals[p][i] = r % m.n();
      r /= m.n();
    }
  }
  Matrix d(t, std::vector<Rational>(t, 0));
  for (int p = 0; p < t; ++p)
    for (int q = 0; q < t; ++q)
      for (int i = 0; i < k; ++i) d[p][q] = std::max(d[p][q], m(vals[p][i], vals[q][i]));
  return PseudoMetric(std::move(d));
}

bool is_isometry(const PseudoMetric& m, const FiniteMap& f) {
  if (f.src_n() != m.n() || f.dst_n() != m.n()) throw UniverseMismatch("isometry must map the carrier to itself");
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      if (m(f(x), f(y)) != m(x, y)) return false;
  return true;
}

bool finer_by_spheres(const PseudoMetric& d1, const PseudoMetric& d2) {
  if (d1.n() != d2.n()) throw UniverseMismatch("metrics on different carriers");
  auto r1 = primary_radii(d1), r2 = primary_radii(d2);
  for (int x = 0; x < d1.n(); ++x)
    for (const auto& s : r2) {
      Subset target = open_sphere(d2, x, s);
      bool found = false;
      for (const auto& r : r1)
        if (is_subset(open_sphere(d1, x, r), target)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace topo
