#include "topo/suites.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "topo/continuity.hpp"
#include "topo/random.hpp"

namespace topo {

namespace {

using Check = std::function<std::optional<json>(std::size_t)>;

SuiteReport run_instances(const std::string& name, int n, std::size_t count, unsigned jobs, const Check& check) {
  std::vector<std::optional<json>> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) out[i] = check(i);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  SuiteReport r{name, n, count, 0, std::nullopt, nullptr};
  for (std::size_t i = 0; i < count; ++i) {
    if (!out[i]) {
      ++r.passed;
    } else if (!r.first_failure) {
      r.first_failure = i;
      r.counterexample = *out[i];
      r.counterexample["instance"] = i;
    }
  }
  return r;
}

json failure(const std::string& detail, const std::string& replay, json input) {
  return {{"detail", detail}, {"replay", replay}, {"input", std::move(input)}};
}

void cap(int n, int lo, int hi, const std::string& suite) {
  if (n < lo || n > hi)
    throw CapExceeded("suite " + suite + " supports n in " + std::to_string(lo) + ".." + std::to_string(hi));
}

SetSystem system_of(int n, std::uint64_t mask) {
  std::vector<Subset> v;
  for (Subset s = 0; s <= full_set(n); ++s)
    if ((mask >> s) & 1u) v.push_back(s);
  return SetSystem(n, std::move(v));
}

SuiteReport setops_suite(int n, unsigned jobs, std::uint64_t seed) {
  cap(n, 0, 4, "setops");
  std::size_t systems = std::size_t{1} << (std::size_t{1} << n);
  bool exhaustive = n <= 3;
  std::size_t count = exhaustive ? systems : 5000;
  return run_instances("setops", n, count, jobs, [=](std::size_t i) -> std::optional<json> {
    std::uint64_t mask = i;
    if (!exhaustive) {
      Rng rng(seed * 1000003 + i);
      mask = std::uniform_int_distribution<std::uint64_t>(0, systems - 1)(rng);
    }
    SetSystem a = system_of(n, mask);
    auto bad = [&](const std::string& what) { return failure(what, "", to_json(a)); };
    if (psi(psi(a)) != psi(a)) return bad("psi not projective");
    if (theta(theta(a)) != theta(a)) return bad("theta not projective");
    if (phi(phi(a)) != phi(a)) return bad("phi not projective");
    if (!psi(theta(a)).is_subfamily_of(theta(psi(a)))) return bad("psi theta not inside theta psi");
    if (!psi(phi(a)).is_subfamily_of(phi(psi(a)))) return bad("psi phi not inside phi psi");
    SetSystem tp = theta(psi(a)), pp = phi(psi(a));
    if (theta(psi(tp)) != tp) return bad("theta psi not projective");
    if (phi(psi(pp)) != pp) return bad("phi psi not projective");
    for (Subset s = 0; s <= full_set(n); ++s) {
      SetSystem b = a.with(s);
      if (!psi(a).is_subfamily_of(psi(b)) || !theta(a).is_subfamily_of(theta(b)) ||
          !phi(a).is_subfamily_of(phi(b)))
        return bad("operator not monotone when adding " + format_subset(s));
    }
    return std::nullopt;
  });
}

SuiteReport enumerate_suite(int n, unsigned jobs) {
  cap(n, 0, 5, "enumerate");
  auto tops = enumerate_topologies(n);
  std::size_t expected = n <= 4 ? enumerate_bruteforce(n).size() : enumerate_backtrack(n).size();
  return run_instances("enumerate", n, tops.size() + 1, jobs, [&](std::size_t i) -> std::optional<json> {
    if (i == tops.size()) {
      if (tops.size() != expected)
        return failure("count " + std::to_string(tops.size()) + " differs from " + std::to_string(expected),
                       "topo enumerate --n " + std::to_string(n) + " --count-only", nullptr);
      return std::nullopt;
    }
    if (!is_topology(tops[i].opens())) return failure("enumerated system is not a topology", "", to_json(tops[i]));
    if (i > 0 && !(tops[i - 1] < tops[i])) return failure("enumeration out of order", "", to_json(tops[i]));
    return std::nullopt;
  });
}

SuiteReport topology_suite(int n, unsigned jobs) {
  cap(n, 0, 3, "topology");
  std::size_t count = std::size_t{1} << (std::size_t{1} << n);
  auto tops = enumerate_topologies(n);
  return run_instances("topology", n, count, jobs, [&, n](std::size_t i) -> std::optional<json> {
    SetSystem a = system_of(n, i);
    bool fixed = a.has(0) && a.has(a.full()) && theta(a) == a && psi(a) == a;
    if (fixed != is_topology(a)) return failure("fixed-point characterization disagrees", "topo generate --opens FILE", to_json(a));
    if (is_topology(a)) {
      Topology t(a);
      if (topology_from_closed(closed_system(t)) != t) return failure("closed round trip", "topo generate --closed FILE", to_json(complements(a)));
    }
    bool base_ok = !base_violation(a);
    bool base_direct = a.has(0) && is_topology(theta(a));
    if (base_ok != base_direct) return failure("base criterion disagrees with theta", "topo generate --base FILE", to_json(a));
    if (!subbase_violation(a)) {
      Topology g = generate_from_subbase(a);
      for (const auto& t : tops)
        if (a.is_subfamily_of(t.opens()) && !g.opens().is_subfamily_of(t.opens()))
          return failure("generated topology is not the coarsest containing the subbase", "topo generate --subbase FILE", to_json(a));
    }
    return std::nullopt;
  });
}

SuiteReport kuratowski_suite(int n, unsigned jobs, bool interior) {
  cap(n, 0, 4, interior ? "interior" : "kuratowski");
  auto tops = enumerate_topologies(n);
  return run_instances(interior ? "interior" : "kuratowski", n, tops.size(), jobs, [&, n](std::size_t i) -> std::optional<json> {
    const Topology& t = tops[i];
    if (interior) {
      SubsetOperator f = interior_operator(t);
      if (topology_from_interior_operator(n, f) != t)
        return failure("interior round trip", "topo generate --interior-op FILE", operator_to_json(n, f));
      if (dual_operator(n, f) != closure_operator(t))
        return failure("dual of interior is not closure", "topo generate --interior-op FILE", operator_to_json(n, f));
    } else {
      SubsetOperator f = closure_operator(t);
      if (kuratowski_violation(n, f)) return failure("closure violates the axioms", "topo generate --closure-op FILE", operator_to_json(n, f));
      if (topology_from_closure_operator(n, f) != t)
        return failure("closure round trip", "topo generate --closure-op FILE", operator_to_json(n, f));
    }
    return std::nullopt;
  });
}

SuiteReport neighborhoods_suite(int n, unsigned jobs) {
  cap(n, 0, 4, "neighborhoods");
  auto tops = enumerate_topologies(n);
  return run_instances("neighborhoods", n, tops.size(), jobs, [&, n](std::size_t i) -> std::optional<json> {
    const Topology& t = tops[i];
    PointSetRelation ns = neighborhood_system_of(t);
    if (neighborhood_violation(ns)) return failure("neighborhood system violates the axioms", "topo generate --neighborhoods FILE", to_json(ns));
    if (topology_from_neighborhood_relation(ns) != t)
      return failure("neighborhood round trip", "topo generate --neighborhoods FILE", to_json(ns));
    if (phi_prime(open_neighborhoods(t)) != ns) return failure("open neighborhoods do not generate", "", to_json(t));
    SetMap m = set_neighborhood_map(t);
    if (topology_from_set_neighborhood_map(n, m) != t)
      return failure("set map round trip", "topo generate --set-map FILE", set_map_to_json(n, m));
    return std::nullopt;
  });
}

SuiteReport filters_suite(int n, unsigned jobs) {
  cap(n, 0, 4, "filters");
  auto filters = all_filters_bruteforce(n);
  std::size_t expected = n == 0 ? 0 : (std::size_t{1} << n) - 1;
  return run_instances("filters", n, filters.size() + 1, jobs, [&, n](std::size_t i) -> std::optional<json> {
    if (i == filters.size()) {
      if (filters.size() != expected) return failure("filter count " + std::to_string(filters.size()), "", nullptr);
      return std::nullopt;
    }
    const Filter& f = filters[i];
    if (f != principal_filter(n, f.core())) return failure("filter is not principal", "topo filter --op generate --base FILE", to_json(f.members()));
    if (is_ultrafilter(f) != (cardinality(f.core()) == 1)) return failure("ultrafilter test disagrees with point filters", "topo filter --op ultra --base FILE", to_json(f.members()));
    Filter u = extend_to_ultrafilter(FilterBase(f));
    if (!f.members().is_subfamily_of(u.members())) return failure("extension is not finer", "topo filter --op extend --base FILE", to_json(f.members()));
    for (const auto& g : filters)
      if (u.members().is_subfamily_of(g.members()) && g != u)
        return failure("extension is not maximal", "topo filter --op extend --base FILE", to_json(f.members()));
    return std::nullopt;
  });
}

SuiteReport convergence_suite(int n, unsigned jobs) {
  cap(n, 0, 3, "convergence");
  auto tops = enumerate_topologies(n);
  auto filters = all_filters_bruteforce(n);
  return run_instances("convergence", n, tops.size(), jobs, [&, n](std::size_t i) -> std::optional<json> {
    const Topology& t = tops[i];
    for (Subset a = 1; a <= t.full(); ++a) {
      Subset adh = filter_limits(t, principal_filter(n, a)).adh;
      Subset conv = 0;
      for (const auto& f : filters)
        if (f.has(a)) conv |= filter_limits(t, f).lim;
      if (adh != closure(t, a) || conv != closure(t, a))
        return failure("closure via filters differs for " + format_subset(a), "topo analyze --space FILE --set " + format_subset(a), to_json(t));
    }
    for (const auto& f : filters) {
      Limits l = filter_limits(t, f);
      for (int x = 0; x < n; ++x)
        if (contains(l.adh, x) != finer_convergent_filter(t, f, x).has_value())
          return failure("adherence without a finer convergent filter", "", to_json(t));
      Net net = net_from_filterbase(FilterBase(f));
      if (net_limits(t, net) != l) return failure("net limits differ from filter limits", "", to_json(t));
    }
    return std::nullopt;
  });
}

SuiteReport continuity_suite(int n, unsigned jobs) {
  cap(n, 0, 3, "continuity");
  auto tops = enumerate_topologies(n);
  std::size_t k = tops.size();
  std::vector<FiniteMap> maps;
  {
    std::vector<int> v(n, 0);
    while (true) {
      maps.emplace_back(n, n, v);
      int i = n - 1;
      while (i >= 0 && ++v[i] == n) v[i--] = 0;
      if (i < 0) break;
    }
  }
  return run_instances("continuity", n, k * k, jobs, [&](std::size_t i) -> std::optional<json> {
    const Topology& s = tops[i / k];
    const Topology& d = tops[i % k];
    for (const auto& f : maps) {
      SpaceMap m(s, d, f);
      auto res = global_characterizations(m);
      for (const auto& r : res)
        if (r.value != res[0].value)
          return failure(r.name + " disagrees with " + res[0].name, "topo cont --src FILE --dst FILE --map FILE",
                         {{"src", to_json(s)}, {"dst", to_json(d)}, {"map", to_json(f)}});
    }
    return std::nullopt;
  });
}

SuiteReport generated_suite(int n, unsigned jobs) {
  cap(n, 1, 3, "generated");
  auto tops = enumerate_topologies(n);
  std::size_t k = tops.size();
  return run_instances("generated", n, k * k, jobs, [&, n](std::size_t i) -> std::optional<json> {
    std::vector<Topology> ts{tops[i / k], tops[i % k]};
    Product p = product_topology(ts);
    auto input = json{{"factors", {to_json(ts[0]), to_json(ts[1])}}};
    for (Subset a = 0; a <= full_set(n); ++a)
      for (Subset b = 0; b <= full_set(n); ++b) {
        Subset bx = box(ts, {a, b});
        if (closure(p.t, bx) != box(ts, {closure(ts[0], a), closure(ts[1], b)}))
          return failure("closure of a box is not the box of closures", "topo product A.json B.json", input);
        if (!is_subset(box(ts, {interior(ts[0], a), interior(ts[1], b)}), interior(p.t, bx)))
          return failure("box of interiors not inside interior", "topo product A.json B.json", input);
        if (a == 0 || b == 0) continue;
        Subspace sub = subspace_topology(p.t, bx);
        std::vector<Topology> parts{subspace_topology(ts[0], a).t, subspace_topology(ts[1], b).t};
        if (sub.t != product_topology(parts).t)
          return failure("subspace of product differs from product of subspaces", "topo product A.json B.json", input);
      }
    for (std::size_t j = 0; j < ts.size(); ++j) {
      SpaceMap m(p.t, ts[j], p.projections[j]);
      if (!is_continuous(m) || !map_open_closed(m).open)
        return failure("projection not continuous and open", "topo product A.json B.json", input);
    }
    return std::nullopt;
  });
}

SuiteReport interval_suite(int n, unsigned jobs) {
  cap(n, 1, 6, "interval");
  // chains of every length up to n, then reflexive cluster chains
  return run_instances("interval", n, static_cast<std::size_t>(n) * 2, jobs, [n](std::size_t i) -> std::optional<json> {
    int len = static_cast<int>(i % n) + 1;
    Preorder p = i < static_cast<std::size_t>(n) ? Preorder::chain(len, Flavor::Strict)
                                                 : Preorder::clusters(std::vector<int>((len + 1) / 2, 2), Flavor::Reflexive);
    if (!has_full_field(p)) return std::nullopt;
    Topology t = interval_topology(p);
    if (p.flavor() == Flavor::Strict && t != Topology::discrete(len))
      return failure("chain interval topology is not discrete", "topo generate --preorder FILE", to_json(p));
    for (Subset y = 0; y <= full_set(p.n()); ++y)
      if (is_order_dense(p, y) && interval_topology_restricted(p, y) != t)
        return failure("order-dense restriction changes the topology", "topo generate --preorder FILE --restrict " + format_subset(y), to_json(p));
    return std::nullopt;
  });
}

SuiteReport metric_suite(int n, unsigned jobs, std::uint64_t seed) {
  cap(n, 1, 5, "metric");
  return run_instances("metric", n, 100, jobs, [=](std::size_t i) -> std::optional<json> {
    Rng rng(seed * 7919 + i);
    PseudoMetric d = random_pseudometric(rng, n);
    Topology t = metric_topology(d);
    auto bad = [&](const std::string& what) { return failure(what, "topo check --metric FILE", to_json(d)); };
    auto [e, f] = bounded_equivalents(d);
    if (metric_topology(e) != t || metric_topology(f) != t) return bad("bounded transforms change the topology");
    if (metric_topology(d, dense_radii(d)) != t) return bad("radius set changes the topology");
    for (Subset a = 1; a <= full_set(n); ++a)
      if (zero_distance_set(d, a) != closure(t, a)) return bad("zero-distance set differs from closure of " + format_subset(a));
    MetricQuotient q = quotient_metric(d);
    if (!q.d.is_metric()) return bad("quotient distance is not a metric");
    if (metric_topology(q.d) != quotient_topology(t, zero_distance_relation(d)).t)
      return bad("metric quotient differs from quotient topology");
    return std::nullopt;
  });
}

SuiteReport numeric_suite(int n, unsigned jobs, std::uint64_t seed) {
  cap(n, 1, 8, "numeric");
  return run_instances("numeric", n, 1000, jobs, [=](std::size_t i) -> std::optional<json> {
    Rng rng(seed * 104729 + i);
    BisectionInstance in = random_bisection_instance(rng);
    json input = {{"p", json::array()}, {"a", to_json(in.a)}, {"b", to_json(in.b)}, {"w", to_json(in.w)}, {"tol", to_json(in.tol)}};
    for (const auto& c : in.p.coeffs()) input["p"].push_back(to_json(c));
    BisectionResult r = bisection_invert(in.p, in.a, in.b, in.w, in.tol);
    Dyadic width = in.b - in.a;
    for (std::size_t s = 0; s < r.trace.size(); ++s) {
      const auto& st = r.trace[s];
      if (st.y - st.x != width.scaled(-static_cast<std::int64_t>(s)))
        return failure("width invariant fails at step " + std::to_string(s), "topo check --bisect FILE", input);
      bool in_bracket = (st.px <= in.w && in.w <= st.py) || (st.py <= in.w && in.w <= st.px);
      if (!in_bracket) return failure("bracket invariant fails at step " + std::to_string(s), "topo check --bisect FILE", input);
    }
    auto x = random_dyadic_vector(rng, n), y = random_dyadic_vector(rng, n);
    if (!cauchy_schwarz_check(x, y).holds) {
      json v = {{"x", json::array()}, {"y", json::array()}};
      for (std::size_t k = 0; k < x.size(); ++k) {
        v["x"].push_back(to_json(x[k]));
        v["y"].push_back(to_json(y[k]));
      }
      return failure("Cauchy-Schwarz fails", "topo check --cauchy-schwarz FILE", v);
    }
    return std::nullopt;
  });
}

SuiteReport homeomorphism_suite(int n, unsigned jobs) {
  cap(n, 0, 4, "homeomorphism");
  auto tops = enumerate_topologies(n);
  std::size_t k = tops.size();
  return run_instances("homeomorphism", n, k * k, jobs, [&](std::size_t i) -> std::optional<json> {
    const Topology& a = tops[i / k];
    const Topology& b = tops[i % k];
    auto w = are_homeomorphic(a, b);
    if (w && w->image(a.opens()) != b.opens())
      return failure("witness does not push the topology", "topo analyze --space A --homeomorphic B", {{"a", to_json(a)}, {"b", to_json(b)}});
    if (w.has_value() != are_homeomorphic(b, a).has_value())
      return failure("homeomorphism is not symmetric", "topo analyze --space A --homeomorphic B", {{"a", to_json(a)}, {"b", to_json(b)}});
    return std::nullopt;
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"setops",    "enumerate",   "topology",   "kuratowski", "interior", "neighborhoods", "filters",
          "convergence", "continuity", "generated", "interval",   "metric",   "numeric",       "homeomorphism"};
}

SuiteReport run_suite(const std::string& name, int n, unsigned jobs, std::uint64_t seed) {
  if (name == "setops") return setops_suite(n, jobs, seed);
  if (name == "enumerate") return enumerate_suite(n, jobs);
  if (name == "topology") return topology_suite(n, jobs);
  if (name == "kuratowski") return kuratowski_suite(n, jobs, false);
  if (name == "interior") return kuratowski_suite(n, jobs, true);
  if (name == "neighborhoods") return neighborhoods_suite(n, jobs);
  if (name == "filters") return filters_suite(n, jobs);
  if (name == "convergence") return convergence_suite(n, jobs);
  if (name == "continuity") return continuity_suite(n, jobs);
  if (name == "generated") return generated_suite(n, jobs);
  if (name == "interval") return interval_suite(n, jobs);
  if (name == "metric") return metric_suite(n, jobs, seed);
  if (name == "numeric") return numeric_suite(n, jobs, seed);
  if (name == "homeomorphism") return homeomorphism_suite(n, jobs);
  throw ParseError("unknown suite \"" + name + "\"");
}

json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},
          {"n", r.n},
          {"instances", r.instances},
          {"passed", r.passed},
          {"failed", r.instances - r.passed},
          {"counterexample", r.counterexample}};
}

}  // namespace topo
