#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "topo/metric.hpp"
#include "topo/numeric.hpp"

namespace topo {

using Rng = std::mt19937_64;

// Shortest-path closure of random rational edge weights, zero weights included.
PseudoMetric random_pseudometric(Rng& rng, int n);

// k / 2^e with |k| < 2^bits and 0 <= e <= max_shift
Dyadic random_dyadic(Rng& rng, int bits, int max_shift);

// Non-negative coefficients, some positive coefficient of positive degree:
// strictly increasing on [0, inf). Negated when decreasing is set.
DyadicPoly random_monotone_poly(Rng& rng, unsigned max_degree, bool decreasing);

struct BisectionInstance {
  DyadicPoly p;
  Dyadic a, b, w, tol;
};
BisectionInstance random_bisection_instance(Rng& rng);

std::vector<Dyadic> random_dyadic_vector(Rng& rng, std::size_t n);

}  // namespace topo
