#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace topo {

using Subset = std::uint32_t;

constexpr int kMaxCarrier = 20;

inline Subset full_set(int n) { return n <= 0 ? 0u : (Subset{1} << n) - 1u; }
inline Subset singleton(int x) { return Subset{1} << x; }
inline bool contains(Subset a, int x) { return (a >> x) & 1u; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset complement(Subset a, int n) { return full_set(n) & ~a; }
inline int cardinality(Subset a) { return std::popcount(a); }
inline int lowest_point(Subset a) { return std::countr_zero(a); }

std::vector<int> points_of(Subset a);
Subset subset_from_points(const std::vector<int>& pts, int n);
std::string format_subset(Subset a);

// Throws CapExceeded when n is outside 0..kMaxCarrier.
void check_carrier(int n);

}  // namespace topo
