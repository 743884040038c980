#include <algorithm>

#include "topo/topology.hpp"

namespace topo {

namespace {

void check_enum_cap(int n, int cap) {
  if (n < 0 || n > cap)
    throw CapExceeded("enumeration supports n <= " + std::to_string(cap) + ", got " + std::to_string(n));
}

inline bool bit(FamilyMask m, Subset s) { return (m >> s) & 1u; }

struct Backtracker {
  int n;
  Subset count;  // number of subsets, 2^n
  Subset top;
  std::vector<FamilyMask> out;

  void run(Subset s, FamilyMask fam, FamilyMask forced) {
    if (s == count) {
      out.push_back(fam);
      return;
    }
    // s joins: every intersection with an earlier member is smaller than s
    // and must already be in; every union is larger and becomes forced.
    bool ok = true;
    FamilyMask next_forced = forced;
    for (FamilyMask rest = fam; rest; rest &= rest - 1) {
      Subset t = static_cast<Subset>(std::countr_zero(rest));
      Subset meet = s & t;
      if (meet != s && !bit(fam, meet)) {
        ok = false;
        break;
      }
      Subset join = s | t;
      if (join != s) next_forced |= FamilyMask{1} << join;
    }
    if (ok) run(s + 1, fam | (FamilyMask{1} << s), next_forced);
    if (s != 0 && s != top && !bit(forced, s)) run(s + 1, fam, forced);
  }
};

}  // namespace

Topology topology_from_mask(int n, FamilyMask mask) {
  std::vector<Subset> v;
  for (; mask; mask &= mask - 1) v.push_back(static_cast<Subset>(std::countr_zero(mask)));
  return Topology(SetSystem(n, std::move(v)));
}

FamilyMask mask_of(const SetSystem& sys) {
  if (sys.n() > 5) throw CapExceeded("family masks need n <= 5");
  FamilyMask m = 0;
  for (Subset s : sys) m |= FamilyMask{1} << s;
  return m;
}

bool mask_is_topology(int n, FamilyMask mask) {
  const Subset top = full_set(n);
  if (!bit(mask, 0) || !bit(mask, top)) return false;
  for (FamilyMask a = mask; a; a &= a - 1) {
    Subset s = static_cast<Subset>(std::countr_zero(a));
    for (FamilyMask b = a & (a - 1); b; b &= b - 1) {
      Subset t = static_cast<Subset>(std::countr_zero(b));
      if (!bit(mask, s | t) || !bit(mask, s & t)) return false;
    }
  }
  return true;
}

std::vector<FamilyMask> enumerate_bruteforce(int n) {
  check_enum_cap(n, 4);
  const std::uint64_t systems = std::uint64_t{1} << (1u << n);
  std::vector<FamilyMask> out;
  for (std::uint64_t m = 0; m < systems; ++m)
    if (mask_is_topology(n, m)) out.push_back(m);
  return out;
}

std::vector<FamilyMask> enumerate_backtrack(int n) {
  check_enum_cap(n, 5);
  Backtracker bt{n, Subset{1} << n, full_set(n), {}};
  bt.run(0, 0, 0);
  std::sort(bt.out.begin(), bt.out.end());
  return bt.out;
}

std::vector<Topology> enumerate_topologies(int n) {
  check_enum_cap(n, 5);
  std::vector<FamilyMask> masks = n <= 4 ? enumerate_bruteforce(n) : enumerate_backtrack(n);
  std::vector<Topology> out;
  out.reserve(masks.size());
  for (FamilyMask m : masks) out.push_back(topology_from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_topologies(int n) {
  check_enum_cap(n, 5);
  return n <= 4 ? enumerate_bruteforce(n).size() : enumerate_backtrack(n).size();
}

}  // namespace topo
