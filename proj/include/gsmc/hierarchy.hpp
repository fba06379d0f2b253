#pragma once

#include <span>
#include <vector>

#include "gsmc/graph.hpp"
#include "gsmc/plan.hpp"
#include "gsmc/rng.hpp"
#include "gsmc/tree.hpp"

namespace gsmc {

// Administrative-unit variants of the tree and boundary operations. Unit
// labels live on the graph (validated at build: units partition the vertices
// and each unit is connected); every function here requires them.

// Uniform sample from the trees that are spanning within every unit
// intersection and whose cross-unit edges form a spanning tree of the
// region's unit quotient. Throws domain_error when the region is not
// hierarchically connected.
RegionTree hierarchical_wilson(const MapGraph& g, std::span<const int> verts, int seats,
                               RngStream& rng);

// log of the hierarchical spanning tree count of the subgraph induced by
// `verts`: log tau(unit quotient) + sum over units of log tau(intersection).
double log_tau_eta(const MapGraph& g, std::span<const int> verts);

// True iff every region meets every unit in at most one connected piece.
bool hierarchically_connected(const MapGraph& g, const Plan& plan);

// Component id per region of the administratively adjacent quotient graph
// (regions joined only by same-unit boundary edges).
std::vector<int> admin_adjacency_components(const MapGraph& g, const Plan& plan);

// True iff regions k1 and k2 share a boundary edge inside some unit.
bool admin_adjacent(const MapGraph& g, const Plan& plan, int k1, int k2);

// A plan admits a plan-level hierarchical tree iff it is hierarchically
// connected and its unit splits equal sum over admin-adjacency components of
// (regions in component - 1).
bool is_hierarchical_plan(const MapGraph& g, const Plan& plan);

// Boundary edges usable by hierarchical tree joins: all of them when the two
// regions share no unit, only the edges inside the single shared unit when
// they share exactly one, none when they share two or more.
std::vector<int> hierarchical_boundary(const MapGraph& g, const Plan& plan, int k1, int k2);

// Merging k1 and k2 keeps the plan hierarchical iff they are administratively
// adjacent or lie in different admin-adjacency components.
bool hierarchically_adjacent(const MapGraph& g, const Plan& plan, int k1, int k2);

// log of the number of linking-edge sets completing a hierarchical plan's
// forests into a plan-level hierarchical tree: log tau of the
// component-contracted region multigraph plus sum of log tau of each
// admin-adjacency component. Throws domain_error on non-hierarchical plans.
double log_hier_linking_edge_count(const MapGraph& g, const Plan& plan);

}  // namespace gsmc
