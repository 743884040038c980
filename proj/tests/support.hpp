#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "topo/topology.hpp"

namespace testing {

using topo::Subset;

inline Subset set(std::initializer_list<int> pts) {
  Subset s = 0;
  for (int x : pts) s |= topo::singleton(x);
  return s;
}

inline topo::SetSystem sys(int n, std::initializer_list<std::initializer_list<int>> members) {
  std::vector<Subset> v;
  for (auto m : members) v.push_back(set(m));
  return topo::SetSystem(n, v);
}

inline topo::Topology top(int n, std::initializer_list<std::initializer_list<int>> opens) {
  return topo::Topology(sys(n, opens));
}

inline oracle::Family family(const topo::SetSystem& s) { return s.sets(); }

// every set system on n points, n <= 4
inline std::vector<topo::SetSystem> all_systems(int n) {
  std::vector<topo::SetSystem> out;
  std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < count; ++m) out.emplace_back(n, oracle::family_of_mask(n, m));
  return out;
}

inline std::vector<topo::Topology> oracle_topologies(int n) {
  std::vector<topo::Topology> out;
  for (auto& f : oracle::all_topologies(n)) out.emplace_back(topo::SetSystem(n, f));
  return out;
}

inline topo::SetSystem random_system(std::mt19937_64& rng, int n) {
  std::vector<Subset> v;
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<Subset> pick(0, topo::full_set(n));
  for (int k = count(rng); k > 0; --k) v.push_back(pick(rng));
  return topo::SetSystem(n, v);
}

}  // namespace testing
