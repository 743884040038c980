#include "topo/convergence.hpp"

#include "topo/neighborhoods.hpp"

namespace topo {

DirectedSet::DirectedSet(FiniteRelation leq) : leq_(std::move(leq)) {
  const int n = leq_.n();
  if (n == 0) throw NotDirected("directed set is empty");
  if (!leq_.is_reflexive()) throw NotDirected("relation is not reflexive");
  if (!leq_.is_transitive()) throw NotDirected("relation is not transitive");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((leq_.row(i) & leq_.row(j)) == 0)
        throw NotDirected("no upper bound for " + std::to_string(i) + " and " + std::to_string(j));
}

DirectedSet DirectedSet::chain(int n) {
  FiniteRelation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r.add(i, j);
  return DirectedSet(r);
}

DirectedSet DirectedSet::product(const DirectedSet& a, const DirectedSet& b) {
  const int n = a.n() * b.n();
  check_carrier(n);
  FiniteRelation r(n);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      for (int k = 0; k < a.n(); ++k)
        for (int l = 0; l < b.n(); ++l)
          if (a.leq(i, k) && b.leq(j, l)) r.add(i * b.n() + j, k * b.n() + l);
  return DirectedSet(r);
}

Net::Net(DirectedSet domain, int target_n, std::vector<int> values)
    : domain_(std::move(domain)), target_n_(target_n), values_(std::move(values)) {
  check_carrier(target_n);
  if (static_cast<int>(values_.size()) != domain_.n())
    throw ParseError("net has " + std::to_string(values_.size()) + " values for a domain of " +
                     std::to_string(domain_.n()));
  for (int v : values_)
    if (v < 0 || v >= target_n) throw ParseError("net value " + std::to_string(v) + " outside carrier");
}

Subset Net::tail(int i) const {
  Subset out = 0;
  for (int j : points_of(domain_.above(i))) out |= singleton(values_[j]);
  return out;
}

bool eventually_in(const Net& net, Subset a) {
  for (int i = 0; i < net.domain().n(); ++i)
    if (is_subset(net.tail(i), a)) return true;
  return false;
}

bool frequently_in(const Net& net, Subset a) {
  for (int i = 0; i < net.domain().n(); ++i)
    if ((net.tail(i) & a) == 0) return false;
  return true;
}

Net map_net(const Net& net, const FiniteMap& f) {
  if (f.src_n() != net.target_n()) throw UniverseMismatch("map source differs from net target");
  std::vector<int> v;
  for (int x : net.values()) v.push_back(f(x));
  return Net(net.domain(), f.dst_n(), std::move(v));
}

Net product_net(const Net& a, const Net& b) {
  DirectedSet d = DirectedSet::product(a.domain(), b.domain());
  const int target = a.target_n() * b.target_n();
  check_carrier(target);
  std::vector<int> v;
  for (int i = 0; i < a.domain().n(); ++i)
    for (int j = 0; j < b.domain().n(); ++j) v.push_back(a(i) * b.target_n() + b(j));
  return Net(d, target, std::move(v));
}

int Sequence::at(std::size_t k) const {
  if (k < pre.size()) return pre[k];
  return cycle[(k - pre.size()) % cycle.size()];
}

void validate_sequence(const Sequence& s, int n) {
  if (s.cycle.empty()) throw ParseError("sequence cycle is empty");
  for (const auto* part : {&s.pre, &s.cycle})
    for (int v : *part)
      if (v < 0 || v >= n) throw ParseError("sequence value " + std::to_string(v) + " outside carrier");
}

bool eventually_in(const Sequence& s, Subset a) {
  for (int v : s.cycle)
    if (!contains(a, v)) return false;
  return true;
}

bool frequently_in(const Sequence& s, Subset a) {
  for (int v : s.cycle)
    if (contains(a, v)) return true;
  return false;
}

namespace {

template <class Eventually, class Frequently>
Limits limits_by(const Topology& t, Eventually ev, Frequently fr) {
  PointSetRelation ns = neighborhood_system_of(t);
  Limits out;
  for (int x = 0; x < t.n(); ++x) {
    bool lim = true;
    bool adh = true;
    for (Subset u : ns.section(x)) {
      if (!ev(u)) lim = false;
      if (!fr(u)) adh = false;
    }
    if (lim) out.lim |= singleton(x);
    if (adh) out.adh |= singleton(x);
  }
  return out;
}

}  // namespace

Limits filter_limits(const Topology& t, const Filter& f) {
  if (t.n() != f.n()) throw UniverseMismatch("filter and topology on different carriers");
  return limits_by(
      t, [&](Subset u) { return f.has(u); },
      [&](Subset u) {
        for (Subset m : f.members())
          if ((m & u) == 0) return false;
        return true;
      });
}

Limits filter_base_limits(const Topology& t, const SetSystem& base) {
  return filter_limits(t, generate_filter(FilterBase(base)));
}

Limits net_limits(const Topology& t, const Net& net) {
  if (t.n() != net.target_n()) throw UniverseMismatch("net and topology on different carriers");
  return limits_by(
      t, [&](Subset u) { return eventually_in(net, u); }, [&](Subset u) { return frequently_in(net, u); });
}

Limits sequence_limits(const Topology& t, const Sequence& s) {
  validate_sequence(s, t.n());
  return limits_by(
      t, [&](Subset u) { return eventually_in(s, u); }, [&](Subset u) { return frequently_in(s, u); });
}

Filter filter_from_net(const Net& net) {
  std::vector<Subset> tails;
  for (int i = 0; i < net.domain().n(); ++i) tails.push_back(net.tail(i));
  return Filter(phi(SetSystem(net.target_n(), std::move(tails))));
}

Net net_from_filterbase(const FilterBase& base) {
  std::vector<std::pair<int, Subset>> dom;
  for (Subset b : base.members())
    for (int x : points_of(b)) dom.emplace_back(x, b);
  const int n = static_cast<int>(dom.size());
  if (n > kMaxCarrier) throw CapExceeded("generated net domain has " + std::to_string(n) + " elements");
  FiniteRelation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_subset(dom[j].second, dom[i].second)) r.add(i, j);
  std::vector<int> values;
  for (const auto& d : dom) values.push_back(d.first);
  return Net(DirectedSet(r), base.n(), std::move(values));
}

std::optional<Filter> finer_convergent_filter(const Topology& t, const Filter& f, int x) {
  if (!contains(filter_limits(t, f).adh, x)) return std::nullopt;
  PointSetRelation ns = neighborhood_system_of(t);
  std::vector<Subset> v;
  for (Subset m : f.members())
    for (Subset u : ns.section(x)) v.push_back(m & u);
  return generate_filter(FilterBase(SetSystem(t.n(), std::move(v))));
}

}  // namespace topo
