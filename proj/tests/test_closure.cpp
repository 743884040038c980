#include <doctest.h>

#include "support.hpp"
#include "topo/closure.hpp"

using namespace topo;
using testing::set;
using testing::sys;

namespace {

// every table with f({}) = {} and A inside f(A), n = 2 or 3
std::vector<SubsetOperator> extensive_tables(int n) {
  std::vector<SubsetOperator> out;
  SubsetOperator f(std::size_t{1} << n, 0);
  const Subset top = full_set(n);
  auto rec = [&](auto&& self, Subset a) -> void {
    if (a > top) {
      out.push_back(f);
      return;
    }
    Subset free = complement(a, n);
    // walk the supersets of a
    for (Subset extra = free;; extra = (extra - 1) & free) {
      f[a] = a | extra;
      self(self, a + 1);
      if (extra == 0) break;
    }
  };
  f[0] = 0;
  rec(rec, 1);
  return out;
}

bool oracle_kuratowski(int n, const SubsetOperator& f) {
  const Subset top = full_set(n);
  if (f[0] != 0) return false;
  for (Subset a = 0; a <= top; ++a) {
    if (!is_subset(a, f[a]) || f[f[a]] != f[a]) return false;
    for (Subset b = 0; b <= top; ++b)
      if (f[a | b] != (f[a] | f[b])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("subset analysis examples") {
  auto s = Topology::sierpinski();
  auto r = analyze_subset(s, set({0}));
  CHECK(r.interior == set({0}));
  CHECK(r.closure == set({0, 1}));
  CHECK(r.derived == set({1}));
  CHECK(r.boundary == set({1}));
  for (auto& t : enumerate_topologies(3)) {
    auto w = analyze_subset(t, t.full());
    CHECK(w.interior == t.full());
    CHECK(w.closure == t.full());
    CHECK(w.boundary == 0);
  }
  auto d = Topology::discrete(3);
  for (Subset a = 0; a < 8; ++a) CHECK(analyze_subset(d, a) == SubsetAnalysis{a, a, 0, 0});
}

TEST_CASE("analysis matches the oracle on n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (auto& t : enumerate_topologies(n)) {
      const auto& o = t.opens().sets();
      for (Subset a = 0; a <= t.full(); ++a) {
        auto r = analyze_subset(t, a);
        REQUIRE(r.closure == oracle::closure(n, o, a));
        REQUIRE(r.interior == oracle::interior(o, a));
        REQUIRE(r.derived == oracle::derived(n, o, a));
        REQUIRE(r.boundary == (r.closure & ~r.interior));
        REQUIRE(r.closure == (a | r.derived));
        REQUIRE(t.is_closed(r.closure));
        REQUIRE(t.is_open(r.interior));
      }
    }
}

TEST_CASE("closure operator round trips on n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (auto& t : enumerate_topologies(n)) {
      auto c = closure_operator(t);
      REQUIRE_FALSE(kuratowski_violation(n, c));
      REQUIRE(topology_from_closure_operator(n, c) == t);
      auto i = interior_operator(t);
      REQUIRE_FALSE(interior_operator_violation(n, i));
      REQUIRE(topology_from_interior_operator(n, i) == t);
      REQUIRE(dual_operator(n, c) == i);
      REQUIRE(dual_operator(n, i) == c);
    }
}

TEST_CASE("valid closure tables on three points are exactly the 29 topologies") {
  auto tables = extensive_tables(3);
  REQUIRE(tables.size() == 512);
  int valid = 0;
  for (auto& f : tables) {
    bool ok = !kuratowski_violation(3, f);
    REQUIRE(ok == oracle_kuratowski(3, f));
    if (!ok) continue;
    ++valid;
    REQUIRE(closure_operator(topology_from_closure_operator(3, f)) == f);
  }
  CHECK(valid == 29);
}

TEST_CASE("operator examples") {
  const int n = 3;
  SubsetOperator id(8), all(8), in(8);
  for (Subset a = 0; a < 8; ++a) {
    id[a] = a;
    all[a] = a == 0 ? 0 : 7;
    in[a] = a == 7 ? 7 : 0;
  }
  CHECK(topology_from_closure_operator(n, id) == Topology::discrete(3));
  CHECK(topology_from_closure_operator(n, all) == Topology::indiscrete(3));
  CHECK(topology_from_interior_operator(n, id) == Topology::discrete(3));
  CHECK(topology_from_interior_operator(n, in) == Topology::indiscrete(3));
  auto s = Topology::sierpinski();
  CHECK(topology_from_closure_operator(2, closure_operator(s)) == s);
  CHECK(dual_operator(2, closure_operator(s)) == interior_operator(s));
}

TEST_CASE("axiom witnesses") {
  SubsetOperator f{1, 1, 2, 3};
  CHECK(kuratowski_violation(2, f)->axiom == 1);
  f = {0, 1, 1, 3};
  CHECK(kuratowski_violation(2, f)->axiom == 2);
  SubsetOperator add{0, 1, 2, 7, 4, 5, 6, 7};
  CHECK(kuratowski_violation(3, add)->axiom == 3);
  SubsetOperator h(8);
  for (Subset a = 0; a < 8; ++a) h[a] = a == 0 ? 0 : (a | (a << 1)) & 7;
  // h({0}) = {0,1} but h({0,1}) = {0,1,2}: not idempotent
  CHECK(kuratowski_violation(3, h));
  CHECK_THROWS_AS(topology_from_closure_operator(3, h), KuratowskiViolation);
  SubsetOperator bad{0, 0, 0, 0};
  CHECK(interior_operator_violation(2, bad)->axiom == 1);
  CHECK_THROWS_AS(topology_from_interior_operator(2, bad), InteriorAxiomViolation);
  CHECK_THROWS_AS(topology_from_closure_operator(2, SubsetOperator{0, 1}), ParseError);
}

TEST_CASE("density") {
  auto s = Topology::sierpinski();
  CHECK(is_dense(s, s.full()));
  CHECK(is_dense(s, set({0})));
  CHECK_FALSE(is_dense(s, set({1})));
  CHECK_FALSE(is_dense(Topology::discrete(3), set({0, 1})));
  CHECK(separable(s));
}

}
