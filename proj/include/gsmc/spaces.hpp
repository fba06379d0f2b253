#pragma once

#include <vector>

#include "gsmc/plan.hpp"
#include "gsmc/tree.hpp"

namespace gsmc {

// The three state spaces the sampler can walk. Each lifts the one before it:
// a forest plan remembers one spanning tree per region, a linking-edge plan
// additionally remembers the boundary edges joining those trees into one
// spanning tree of the whole graph.
enum class SpaceKind { graph, forest, linking_edge };

struct ForestPlan {
  Plan plan;
  std::vector<RegionTree> trees;  // trees[k] spans region k
};

struct LinkingPlan {
  ForestPlan forest;
  std::vector<int> linking_edges;  // edge indices; regions()-1 entries
};

}  // namespace gsmc
