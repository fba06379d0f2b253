#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gsmc/graph.hpp"
#include "gsmc/plan.hpp"
#include "gsmc/scheme.hpp"

namespace gsmc {

// Exhaustive spanning-tree enumeration over an explicit edge list (parallel
// edges allowed, each counted distinct). Intended for small inputs; the
// search prunes on cycles, so cost is roughly (#trees) * n.
// Returns subsets of edge indices, each of size n-1.
std::vector<std::vector<int>> enumerate_spanning_trees(
    int n, const std::vector<std::pair<int, int>>& edges);

std::int64_t count_spanning_trees_brute(int n, const std::vector<std::pair<int, int>>& edges);

// All plans with exactly `num_regions` connected regions and a size choice
// per region that meets the per-seat population bounds. Regions are emitted
// in canonical order (region k holds the smallest vertex outside regions
// 0..k-1), each plan exactly once. `sizes_must_be_schedulable` additionally
// filters to multisets reachable by the given schedule kind.
struct EnumerateOptions {
  int num_regions = 0;
  double per_seat_min = 0.0, per_seat_max = 0.0;
  bool filter_schedule = false;
  ScheduleKind schedule = ScheduleKind::any_valid;
};

void enumerate_plans(const MapGraph& g, const DistrictingScheme& scheme,
                     const EnumerateOptions& opt, const std::function<void(const Plan&)>& sink);

std::vector<Plan> enumerate_plans(const MapGraph& g, const DistrictingScheme& scheme,
                                  const EnumerateOptions& opt);

}  // namespace gsmc
