#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/io.hpp"

namespace topo {

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::optional<std::size_t> first_failure;
  json counterexample;  // {"instance", "replay", "input", "detail"} or null
};

std::vector<std::string> suite_names();

// Instances fan out over `jobs` threads; results merge by instance index.
// Throws ParseError for an unknown suite and CapExceeded for n beyond its cap.
SuiteReport run_suite(const std::string& name, int n, unsigned jobs = 1, std::uint64_t seed = 1);

json to_json(const SuiteReport& r);

}  // namespace topo
