#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "gsmc/graph.hpp"

namespace gsmc {

// A partition of the graph into r sized regions. Regions are semantically
// unlabeled: equality and hashing go through the canonical relabeling by
// smallest contained vertex index.
struct Plan {
  std::vector<int> assign;  // vertex -> region in [0, r)
  std::vector<int> sizes;   // region -> seats s_k

  int regions() const { return static_cast<int>(sizes.size()); }

  Plan canonical() const;
  std::uint64_t canonical_hash() const;
  friend bool operator==(const Plan& a, const Plan& b) {
    const Plan ca = a.canonical(), cb = b.canonical();
    return ca.assign == cb.assign && ca.sizes == cb.sizes;
  }
};

// Plan multigraph: one node per region, parallel-edge multiplicities between
// adjacent regions. Also reused for unit quotients and other contractions.
struct QuotientMultigraph {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> mult;  // key (i < j), value >= 1
};

std::vector<int> region_vertices(const Plan& plan, int k);
std::vector<std::int64_t> region_pops(const MapGraph& g, const Plan& plan);

// True iff every region's induced subgraph is connected and the assignment is
// a dense partition consistent with sizes.
bool plan_valid(const MapGraph& g, const Plan& plan);

// Edges of G with one endpoint in region k and the other in k2 (the boundary
// set), ascending edge index.
std::vector<int> boundary_edges(const MapGraph& g, const Plan& plan, int k, int k2);

// All unordered adjacent region pairs with their boundary edge counts,
// ordered by (k, k2).
std::vector<std::tuple<int, int, int>> adjacent_region_pairs(const MapGraph& g, const Plan& plan);

// The unique one-fewer-region ancestor obtained by unifying two adjacent
// regions. Merged region takes index min(k, k2); higher indices shift down.
Plan merge_regions(const MapGraph& g, const Plan& plan, int k, int k2);

QuotientMultigraph quotient_multigraph(const MapGraph& g, const Plan& plan);

struct EdgesRemoved {
  double fraction = 0.0;
  int count = 0;
};
EdgesRemoved edges_removed(const MapGraph& g, const Plan& plan);

// Sum over units and regions of the component count of (unit ∩ region),
// minus the number of units.
int admin_splits(const MapGraph& g, const Plan& plan);

}  // namespace gsmc
