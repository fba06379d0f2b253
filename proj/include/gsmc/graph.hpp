#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gsmc {

// Immutable dual graph of map units. Vertices, edges, and admin units are
// densely integer-indexed; external string ids matter only at the IO boundary.
// Invariants established by build(): connected, no self-loops, no duplicate
// edges, populations >= 0 with positive total, and (when units are present)
// every unit's induced subgraph connected.
struct MapGraph {
  std::vector<std::string> ids;                    // vertex id strings
  std::vector<std::int64_t> pop;                   // per-vertex population
  std::map<std::string, std::vector<double>> attrs;
  std::vector<int> unit;                           // vertex -> unit, empty if no hierarchy
  std::vector<std::string> unit_names;
  std::vector<std::pair<int, int>> edge;           // u < v
  std::int64_t total_pop = 0;

  // CSR adjacency; adj_vtx/adj_edge are parallel.
  std::vector<int> adj_off, adj_vtx, adj_edge;

  static MapGraph build(std::vector<std::string> ids, std::vector<std::int64_t> pops,
                        std::vector<std::pair<int, int>> edges, std::vector<int> unit = {},
                        std::vector<std::string> unit_names = {},
                        std::map<std::string, std::vector<double>> attrs = {});

  int n() const { return static_cast<int>(pop.size()); }
  int m() const { return static_cast<int>(edge.size()); }
  bool has_units() const { return !unit.empty(); }
  int num_units() const { return static_cast<int>(unit_names.size()); }

  std::span<const int> neighbors(int v) const {
    return {adj_vtx.data() + adj_off[v], adj_vtx.data() + adj_off[v + 1]};
  }
  std::span<const int> incident_edges(int v) const {
    return {adj_edge.data() + adj_off[v], adj_edge.data() + adj_off[v + 1]};
  }
};

// True iff the subgraph induced by `verts` (all distinct) is connected.
// An empty set is not connected; a singleton is.
bool connected_subset(const MapGraph& g, std::span<const int> verts);

// Disjoint-set over a fixed universe; used for component counting.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace gsmc
