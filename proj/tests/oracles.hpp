#pragma once

// Brute-force oracles, written straight from the definitions and kept
// independent of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "topo/bits.hpp"

namespace oracle {

using topo::Subset;
using Family = std::vector<Subset>;

inline Family normalize(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline Family family_of_mask(int n, std::uint64_t mask) {
  Family f;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if ((mask >> s) & 1u) f.push_back(s);
  return f;
}

// intersections over every nonempty subfamily
inline Family psi(int n, const Family& f) {
  Family out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << f.size()); ++pick) {
    Subset acc = topo::full_set(n);
    for (std::size_t i = 0; i < f.size(); ++i)
      if ((pick >> i) & 1u) acc &= f[i];
    out.push_back(acc);
  }
  return normalize(out);
}

// unions over every nonempty subfamily
inline Family theta(const Family& f) {
  Family out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << f.size()); ++pick) {
    Subset acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if ((pick >> i) & 1u) acc |= f[i];
    out.push_back(acc);
  }
  return normalize(out);
}

inline Family phi(int n, const Family& f) {
  Family out;
  for (Subset b = 0; b < (Subset{1} << n); ++b)
    for (Subset a : f)
      if ((a & ~b) == 0) {
        out.push_back(b);
        break;
      }
  return out;
}

inline bool has(const Family& f, Subset s) { return std::find(f.begin(), f.end(), s) != f.end(); }

inline bool subfamily(const Family& a, const Family& b) {
  for (Subset s : a)
    if (!has(b, s)) return false;
  return true;
}

// contains the empty set and X, closed under pairwise union and intersection
inline bool is_topology(int n, const Family& f) {
  if (!has(f, 0) || !has(f, topo::full_set(n))) return false;
  for (Subset a : f)
    for (Subset b : f)
      if (!has(f, a | b) || !has(f, a & b)) return false;
  return true;
}

// same check directly on a bit mask over subsets
inline bool mask_is_topology(int n, std::uint64_t mask) {
  Subset top = topo::full_set(n);
  auto in = [&](Subset s) { return (mask >> s) & 1u; };
  if (!in(0) || !in(top)) return false;
  for (Subset a = 0; a <= top; ++a) {
    if (!in(a)) continue;
    for (Subset b = a + 1; b <= top; ++b)
      if (in(b) && (!in(a | b) || !in(a & b))) return false;
  }
  return true;
}

inline std::vector<Family> all_topologies(int n) {
  std::vector<Family> out;
  std::uint64_t systems = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < systems; ++m)
    if (mask_is_topology(n, m)) out.push_back(family_of_mask(n, m));
  return out;
}

inline bool is_open(const Family& t, Subset a) { return has(t, a); }

// x is in the closure iff every open set around x meets A
inline Subset closure(int n, const Family& t, Subset a) {
  Subset r = 0;
  for (int x = 0; x < n; ++x) {
    bool meets = true;
    for (Subset u : t)
      if (topo::contains(u, x) && (u & a) == 0) meets = false;
    if (meets) r |= topo::singleton(x);
  }
  return r;
}

inline Subset interior(const Family& t, Subset a) {
  Subset r = 0;
  for (Subset u : t)
    if ((u & ~a) == 0) r |= u;
  return r;
}

// U is a neighborhood of x iff some open V has x in V inside U
inline bool is_neighborhood(const Family& t, int x, Subset u) {
  for (Subset v : t)
    if (topo::contains(v, x) && (v & ~u) == 0) return true;
  return false;
}

// accumulation points: every neighborhood meets A outside x
inline Subset derived(int n, const Family& t, Subset a) {
  Subset r = 0;
  for (int x = 0; x < n; ++x) {
    bool acc = true;
    for (Subset u = 0; u < (Subset{1} << n); ++u)
      if (is_neighborhood(t, x, u) && (a & u & ~topo::singleton(x)) == 0) acc = false;
    if (acc) r |= topo::singleton(x);
  }
  return r;
}

inline Subset preimage(const std::vector<int>& f, Subset b) {
  Subset r = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (topo::contains(b, f[x])) r |= topo::singleton(static_cast<int>(x));
  return r;
}

inline bool continuous(const Family& src, const Family& dst, const std::vector<int>& f) {
  for (Subset v : dst)
    if (!has(src, preimage(f, v))) return false;
  return true;
}

// all maps {0..a-1} -> {0..b-1}
inline std::vector<std::vector<int>> all_maps(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(a, 0);
  if (a > 0 && b == 0) return out;
  while (true) {
    out.push_back(v);
    int i = a - 1;
    while (i >= 0 && ++v[i] == b) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// filter axioms on a family
inline bool is_filter(int n, const Family& f) {
  if (has(f, 0) || !has(f, topo::full_set(n))) return false;
  for (Subset a : f)
    for (Subset b : f)
      if (!has(f, a & b)) return false;
  for (Subset a : f)
    for (Subset b = 0; b < (Subset{1} << n); ++b)
      if ((a & ~b) == 0 && !has(f, b)) return false;
  return true;
}

}  // namespace oracle
