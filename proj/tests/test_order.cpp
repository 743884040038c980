#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "topo/closure.hpp"
#include "topo/generated.hpp"
#include "topo/order.hpp"

using namespace topo;
using testing::set;
using testing::sys;
using testing::top;

namespace {

std::size_t oracle_preorder_count(int n, bool reflexive) {
  std::size_t count = 0;
  const int cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    auto rel = [&](int x, int y) { return (m >> (x * n + y)) & 1u; };
    bool ok = true, refl = true;
    for (int x = 0; x < n && ok; ++x) {
      refl = refl && rel(x, x);
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (rel(x, y) && rel(y, z) && !rel(x, z)) ok = false;
    }
    if (ok && (n == 0 || refl == reflexive)) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("preorder construction") {
  CHECK_THROWS_AS(Preorder(FiniteRelation(3, {{0, 1}, {1, 2}}), Flavor::Strict), NotPreorder);
  CHECK_THROWS_AS(Preorder(FiniteRelation(2, {{0, 1}}), Flavor::Reflexive), NotPreorder);
  CHECK_THROWS_AS(Preorder(FiniteRelation(2, {{0, 0}, {1, 1}}), Flavor::Strict), NotPreorder);
  CHECK_NOTHROW(Preorder(FiniteRelation(0), Flavor::Reflexive));
  auto c = Preorder::chain(3, Flavor::Strict);
  CHECK(c.below(0, 2));
  CHECK_FALSE(c.below(1, 1));
  CHECK(c.lower(2) == set({0, 1}));
  CHECK(c.upper(0) == set({1, 2}));
  auto r = Preorder::chain(3, Flavor::Reflexive);
  CHECK(r.below(1, 1));
  auto k = Preorder::clusters({2, 1}, Flavor::Reflexive);
  CHECK(k.below(1, 0));
  CHECK(k.below(0, 2));
  CHECK_FALSE(k.below(2, 0));
  auto f = Preorder::fence(4, Flavor::Strict);
  CHECK(f.below(0, 1));
  CHECK(f.below(2, 1));
  CHECK(f.below(2, 3));
  CHECK_FALSE(f.below(0, 3));
}

TEST_CASE("all preorders match a transitive-closure scan") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(all_preorders(n, Flavor::Reflexive).size() == oracle_preorder_count(n, true));
    CHECK(all_preorders(n, Flavor::Strict).size() == oracle_preorder_count(n, false));
  }
  // reflexive transitive relations on 4 points
  CHECK(all_preorders(4, Flavor::Reflexive).size() == 355);
}

TEST_CASE("relation properties") {
  auto c = relation_properties(Preorder::chain(3, Flavor::Strict));
  CHECK(c.transitive);
  CHECK_FALSE(c.reflexive);
  CHECK(c.connective);
  CHECK(c.full_field);
  CHECK_FALSE(c.full_domain);
  CHECK_FALSE(c.full_range);
  CHECK(c.interval_intersection);
  CHECK(c.least_upper_bound);
  auto e = relation_properties(Preorder(FiniteRelation(2), Flavor::Strict));
  CHECK_FALSE(e.full_field);
  CHECK_FALSE(e.connective);
  for (int n = 1; n <= 5; ++n) {
    CHECK(has_interval_intersection_property(Preorder::chain(n, Flavor::Strict)));
    CHECK(has_interval_intersection_property(Preorder::chain(n, Flavor::Reflexive)));
  }
  auto r = relation_properties(Preorder::chain(2, Flavor::Reflexive));
  CHECK(r.full_domain);
  CHECK(r.full_range);
  CHECK(r.reflexive);
}

TEST_CASE("least upper bounds") {
  CHECK(has_least_upper_bound_property(Preorder::chain(4, Flavor::Strict)));
  // {0,1} has upper bounds 2 and 3 with no least one
  Preorder bowtie(FiniteRelation(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), Flavor::Strict);
  CHECK_FALSE(has_least_upper_bound_property(bowtie));
  // vacuous: {0} is its own bound and {1,2} has none
  Preorder v(FiniteRelation(3, {{0, 1}, {0, 2}}), Flavor::Strict);
  CHECK(has_least_upper_bound_property(v));
}

TEST_CASE("interval topology examples") {
  for (int n = 2; n <= 6; ++n) REQUIRE(interval_topology(Preorder::chain(n, Flavor::Strict)) == Topology::discrete(n));
  CHECK_THROWS_AS(interval_topology(Preorder::chain(1, Flavor::Strict)), NoFullField);
  Preorder pairs(FiniteRelation(4, {{0, 1}, {2, 3}}), Flavor::Strict);
  CHECK(interval_topology(pairs) == Topology::discrete(4));
  CHECK_THROWS_AS(interval_topology(Preorder(FiniteRelation(3, {{0, 1}}), Flavor::Strict)), NoFullField);
  CHECK_THROWS_AS(interval_topology_restricted(Preorder(FiniteRelation(3, {{0, 1}}), Flavor::Strict), 1), NoFullField);
  CHECK(interval_subbase(Preorder::chain(3, Flavor::Strict), set({1})) == sys(3, {{}, {0}, {2}}));
}

TEST_CASE("order density") {
  auto c = Preorder::chain(3, Flavor::Strict);
  for (Subset y = 0; y < 8; ++y) CHECK_FALSE(is_order_dense(c, y));
  CHECK(is_order_dense(Preorder(FiniteRelation(2), Flavor::Strict), 0));
  auto k = Preorder::clusters({2, 2}, Flavor::Reflexive);
  CHECK(is_order_dense(k, 15));
  CHECK_FALSE(is_order_dense(k, set({0})));
}

TEST_CASE("order-dense restriction keeps the topology on chains, fences and clusters") {
  std::vector<Preorder> ps;
  for (int n = 1; n <= 5; ++n)
    for (Flavor f : {Flavor::Strict, Flavor::Reflexive}) {
      ps.push_back(Preorder::chain(n, f));
      ps.push_back(Preorder::fence(n, f));
    }
  ps.push_back(Preorder::clusters({2, 2}, Flavor::Reflexive));
  ps.push_back(Preorder::clusters({2, 1, 2}, Flavor::Reflexive));
  ps.push_back(Preorder::clusters({1, 2, 2}, Flavor::Reflexive));
  int hits = 0;
  for (auto& p : ps) {
    if (!has_full_field(p)) continue;
    auto t = interval_topology(p);
    for (Subset y = 0; y <= full_set(p.n()); ++y)
      if (is_order_dense(p, y)) {
        ++hits;
        REQUIRE(interval_topology_restricted(p, y) == t);
      }
  }
  CHECK(hits > 0);
}

TEST_CASE("order-dense sets are dense under the interval intersection property") {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (Flavor f : {Flavor::Strict, Flavor::Reflexive})
      for (auto& p : all_preorders(n, f)) {
        if (!has_full_field(p) || !has_interval_intersection_property(p)) continue;
        auto t = interval_topology(p);
        for (Subset y = 1; y <= full_set(n); ++y)
          if (is_order_dense(p, y)) {
            ++checked;
            REQUIRE(is_dense(t, y));
          }
      }
  CHECK(checked > 0);
}

TEST_CASE("one-sided topologies") {
  auto c = Preorder::chain(3, Flavor::Strict);
  CHECK(one_sided_topology(c, Side::Lower) == top(3, {{}, {0}, {0, 1}, {0, 1, 2}}));
  CHECK(one_sided_topology(c, Side::Upper) == top(3, {{}, {2}, {1, 2}, {0, 1, 2}}));
  auto r = Preorder::chain(3, Flavor::Reflexive);
  CHECK(one_sided_topology(r, Side::Lower) == top(3, {{}, {0}, {0, 1}, {0, 1, 2}}));
  for (int n = 1; n <= 5; ++n) {
    auto segs = lower_segments(Preorder::chain(n, Flavor::Strict), full_set(n)).with(full_set(n));
    REQUIRE(theta(segs) == segs);
  }
  Preorder v(FiniteRelation(3, {{0, 1}, {0, 2}}), Flavor::Strict);
  CHECK_THROWS_AS(one_sided_topology(v, Side::Lower), MissingFullDomain);
  CHECK_THROWS_AS(one_sided_topology(v, Side::Upper), MissingFullRange);
}

TEST_CASE("one-sided gap search") {
  // a reported gap must have full domain, a covering Y-restricted system that is not order dense,
  // and that system must fail to generate the same opens by unions alone
  auto verify = [](const OneSidedGap& g) {
    const auto& p = g.p;
    int n = p.n();
    Subset all = full_set(n);
    std::vector<Subset> lower(n), r;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.relation().related(y, x)) lower[x] |= singleton(y);
    oracle::Family segs{0};
    for (int x = 0; x < n; ++x) {
      segs.push_back(lower[x]);
      if (contains(g.y, x)) r.push_back(lower[x]);
    }
    for (int x = 0; x < n; ++x) {
      bool has_above = false;
      for (int y = 0; y < n; ++y) has_above = has_above || p.relation().related(x, y);
      CHECK(has_above);
    }
    Subset cover = 0;
    for (Subset u : r) cover |= u;
    CHECK(cover == all);
    bool dense = true;
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        if (!p.relation().related(x, z)) continue;
        bool between = false;
        for (int m : points_of(g.y)) between = between || (p.relation().related(x, m) && p.relation().related(m, z));
        dense = dense && between;
      }
    CHECK_FALSE(dense);
    oracle::Family opens = oracle::theta(oracle::psi(n, oracle::normalize(segs)));
    r.push_back(0);
    CHECK(oracle::theta(oracle::normalize(r)) != opens);
  };
  auto refl = search_one_sided_gap(4, Flavor::Reflexive);
  REQUIRE(refl);
  verify(*refl);
  // smallest instance: 0 <= 1 with Y = {1}
  CHECK(refl->p.relation() == Preorder::chain(2, Flavor::Reflexive).relation());
  CHECK(refl->y == set({1}));
  auto strict = search_one_sided_gap(4, Flavor::Strict);
  REQUIRE(strict);
  verify(*strict);
  CHECK(strict->p.n() == 3);
  CHECK_FALSE(search_one_sided_gap(2, Flavor::Strict));
}

TEST_CASE("pullbacks generate the product of interval topologies") {
  for (Flavor fl : {Flavor::Strict, Flavor::Reflexive})
    for (int a = 2; a <= 3; ++a)
      for (int b = 2; b <= 3; ++b) {
        auto pa = Preorder::chain(a, fl), pb = Preorder::chain(b, fl);
        auto prod = product_topology({interval_topology(pa), interval_topology(pb)});
        int n = prod.t.n();
        std::vector<Preorder> fam{pullback(pa, prod.projections[0]), pullback(pb, prod.projections[1])};
        REQUIRE(family_interval_topology(n, fam) == prod.t);
      }
  auto p = pullback(Preorder::chain(2, Flavor::Strict), FiniteMap(3, 2, {0, 1, 1}));
  CHECK(p.below(0, 2));
  CHECK_FALSE(p.below(1, 2));
  CHECK_THROWS_AS(family_interval_topology(3, {Preorder(FiniteRelation(3, {{0, 1}}), Flavor::Strict)}), NoFullField);
  CHECK_THROWS_AS(family_interval_topology(2, {Preorder::chain(3, Flavor::Strict)}), UniverseMismatch);
}

}
