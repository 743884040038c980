#pragma once

#include <string>
#include <vector>

#include "topo/generated.hpp"
#include "topo/rational.hpp"

namespace topo {

using Matrix = std::vector<std::vector<Rational>>;

enum class MetricKind { Pseudo, Metric, Invalid };

const char* metric_kind_name(MetricKind k);

struct MetricValidation {
  MetricKind kind = MetricKind::Invalid;
  std::string reason;
  std::vector<int> witness;  // (x, y) or (x, y, z) with y in the middle
};
MetricValidation validate_pseudometric(const Matrix& d);

class PseudoMetric {
 public:
  PseudoMetric() = default;
  // Throws InvalidMetric.
  explicit PseudoMetric(Matrix d);
  static PseudoMetric zero(int n);
  // 1 between distinct points
  static PseudoMetric discrete(int n);

  int n() const { return static_cast<int>(d_.size()); }
  const Rational& operator()(int x, int y) const { return d_[x][y]; }
  const Matrix& matrix() const { return d_; }
  bool is_metric() const;
  bool operator==(const PseudoMetric&) const = default;

 private:
  Matrix d_;
};

Subset open_sphere(const PseudoMetric& m, int x, const Rational& r);
Subset closed_sphere(const PseudoMetric& m, int x, const Rational& r);

// Distinct positive distances plus max + 1.
std::vector<Rational> primary_radii(const PseudoMetric& m);
// k/2 for k = 1 .. 2(max + 1), plus half the smallest positive distance.
std::vector<Rational> dense_radii(const PseudoMetric& m);

Topology metric_topology(const PseudoMetric& m);
Topology metric_topology(const PseudoMetric& m, const std::vector<Rational>& radii);

struct BoundedPair {
  PseudoMetric e;  // min(d, 1)
  PseudoMetric f;  // d / (1 + d)
};
BoundedPair bounded_equivalents(const PseudoMetric& m);

struct MetricQuotient {
  std::vector<Subset> classes;
  PseudoMetric d;
  FiniteMap class_map;
};
MetricQuotient quotient_metric(const PseudoMetric& m);
FiniteRelation zero_distance_relation(const PseudoMetric& m);

// dist(A, x) for every x. Throws EmptyArgument for empty A.
std::vector<Rational> distance_to_set(const PseudoMetric& m, Subset a);
Subset zero_distance_set(const PseudoMetric& m, Subset a);

PseudoMetric restrict_metric(const PseudoMetric& m, Subset a);

// Maps from k points into the carrier of m, indexed as in function_space;
// D(f, g) = max over x of d(f(x), g(x)).
PseudoMetric sup_metric(int k, const PseudoMetric& m);

bool is_isometry(const PseudoMetric& m, const FiniteMap& f);

// tau(d1) finer than tau(d2) by sphere inclusion: every d2-sphere about x
// contains a d1-sphere about x.
bool finer_by_spheres(const PseudoMetric& d1, const PseudoMetric& d2);

}  // namespace topo
