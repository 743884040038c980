#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topo/filters.hpp"
#include "topo/maps.hpp"

namespace topo {

struct SpaceMap {
  SpaceMap(Topology src, Topology dst, FiniteMap f);
  Topology src;
  Topology dst;
  FiniteMap f;
};

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

// Preimage of every target-open set is open.
bool is_continuous(const SpaceMap& m);
// Preimage of every neighborhood of f(x) is a neighborhood of x.
bool is_continuous_at(const SpaceMap& m, int x);
// Preimage of every open set around f(x) is open. Implies is_continuous_at,
// but not conversely; globally the two agree.
bool open_preimages_at(const SpaceMap& m, int x);

// Base of minimal open sets plus the empty set; also a subbase.
SetSystem minimal_open_base(const Topology& t);

// Global characterizations, each computed on its own terms.
namespace continuity {
bool by_open_preimages(const SpaceMap& m);
bool by_subbase_preimages(const SpaceMap& m, const SetSystem& target_subbase);
bool by_closed_preimages(const SpaceMap& m);
bool by_pointwise_neighborhoods(const SpaceMap& m);
bool by_filter_transfer(const SpaceMap& m);
bool by_closure_images(const SpaceMap& m);
bool by_closure_preimages(const SpaceMap& m);
bool by_interior_preimages(const SpaceMap& m);
bool by_nets(const SpaceMap& m);

// Local characterizations at x.
bool local_by_subbase(const SpaceMap& m, int x, const SetSystem& target_subbase, const SetSystem& nbhd_base_at_x);
bool local_by_neighborhoods(const SpaceMap& m, int x);
bool local_by_filter_transfer(const SpaceMap& m, int x);
bool local_by_filter_bases(const SpaceMap& m, int x);
bool local_by_nets(const SpaceMap& m, int x);
}  // namespace continuity

struct NamedResult {
  std::string name;
  bool value;
};
// All global characterizations for one map.
std::vector<NamedResult> global_characterizations(const SpaceMap& m);

struct OpenClosed {
  bool open = false;
  bool closed = false;
};
OpenClosed map_open_closed(const SpaceMap& m);
// Images of base members are open.
bool open_by_base(const SpaceMap& m, const SetSystem& source_base);

bool is_homeomorphism(const SpaceMap& m);
// Throws UniverseCardinalityMismatch for different sizes, CapExceeded beyond 6 points.
std::optional<FiniteMap> are_homeomorphic(const Topology& a, const Topology& b);

// fy is coarser than the image of fx. Throws ClusterPreconditionFailed.
bool filter_continuity_at(const Filter& fx, const Filter& fy, const SpaceMap& m, int x);

}  // namespace topo
