#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gsmc/graph.hpp"
#include "gsmc/plan.hpp"
#include "gsmc/rng.hpp"

namespace gsmc {

// Rooted spanning tree of a region's induced subgraph. Vertices are stored as
// global ids in `verts`; parent/order use local indices into that array.
// `order` lists local indices root-first (parents before children).
struct RegionTree {
  std::vector<int> verts;
  std::vector<int> parent;  // local parent index, -1 at root
  std::vector<int> order;
  int root = 0;
  int seats = 0;

  int n() const { return static_cast<int>(verts.size()); }
  // Tree edges as global vertex pairs; n-1 entries.
  std::vector<std::pair<int, int>> edges() const;
};

// Uniform spanning tree of the induced subgraph via loop-erased random walks;
// every spanning tree has probability 1/tau. Root is verts[0].
RegionTree wilson_tree(const MapGraph& g, std::span<const int> verts, int seats,
                       RngStream& rng);

// log tau of the induced subgraph by the matrix-tree theorem: log-determinant
// of an (n-1)x(n-1) Laplacian principal minor via an SPD factorization.
double log_spanning_tree_count(const MapGraph& g, std::span<const int> verts);
double log_spanning_tree_count(const MapGraph& g);

// Multigraph variant; multiplicities enter the Laplacian as edge weights.
double log_spanning_tree_count(const QuotientMultigraph& q);

// One candidate split: remove the edge above local vertex `cut_local` and
// give the subtree below it `size_below` seats, the rest `size_above`.
struct TreeCut {
  int cut_local = -1;
  int pair_index = -1;  // index into the ordered size list supplied
  int size_below = 0, size_above = 0;
  std::int64_t pop_below = 0, pop_above = 0;
  double max_abs_dev = 0.0;
  bool balanced = false;
};

// All (edge, ordered size pair) cuts of the tree: exactly (n-1)*m entries in
// deterministic edge-major order. Side populations come from one post-order
// accumulation pass. Deviations are measured against the global per-seat
// population `pop_per_seat`; the balanced flag tests both side populations
// against the inclusive per-seat interval [per_seat_min, per_seat_max]
// scaled by the side's seat count.
std::vector<TreeCut> enumerate_tree_cuts(const MapGraph& g, const RegionTree& tree,
                                         std::span<const std::pair<int, int>> ordered_sizes,
                                         double per_seat_min, double per_seat_max,
                                         double pop_per_seat);

// Vertex sets (global ids) of the two sides of a cut: first the subtree below
// the cut edge, then the remainder containing the root.
std::pair<std::vector<int>, std::vector<int>> cut_sides(const RegionTree& tree, int cut_local);

}  // namespace gsmc
