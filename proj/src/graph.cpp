#include "gsmc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsmc {

MapGraph MapGraph::build(std::vector<std::string> ids, std::vector<std::int64_t> pops,
                         std::vector<std::pair<int, int>> edges, std::vector<int> unit,
                         std::vector<std::string> unit_names,
                         std::map<std::string, std::vector<double>> attrs) {
  const int n = static_cast<int>(pops.size());
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (!ids.empty() && static_cast<int>(ids.size()) != n)
    throw std::invalid_argument("ids/pops length mismatch");
  if (ids.empty()) {
    ids.resize(n);
    for (int i = 0; i < n; ++i) ids[i] = std::to_string(i);
  }

  MapGraph g;
  g.ids = std::move(ids);
  g.pop = std::move(pops);
  g.attrs = std::move(attrs);
  for (const auto& [name, col] : g.attrs)
    if (static_cast<int>(col.size()) != n)
      throw std::invalid_argument("attribute '" + name + "' length mismatch");

  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  g.edge = std::move(edges);

  std::int64_t total = 0;
  for (auto p : g.pop) {
    if (p < 0) throw std::invalid_argument("negative population");
    total += p;
  }
  if (total <= 0) throw std::invalid_argument("total population must be positive");
  g.total_pop = total;

  // CSR
  g.adj_off.assign(n + 1, 0);
  for (const auto& [u, v] : g.edge) {
    g.adj_off[u + 1]++;
    g.adj_off[v + 1]++;
  }
  for (int i = 0; i < n; ++i) g.adj_off[i + 1] += g.adj_off[i];
  g.adj_vtx.resize(g.adj_off[n]);
  g.adj_edge.resize(g.adj_off[n]);
  std::vector<int> cur(g.adj_off.begin(), g.adj_off.end() - 1);
  for (int e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edge[e];
    g.adj_vtx[cur[u]] = v;
    g.adj_edge[cur[u]++] = e;
    g.adj_vtx[cur[v]] = u;
    g.adj_edge[cur[v]++] = e;
  }

  // Connectivity of the whole graph.
  {
    UnionFind uf(n);
    int comps = n;
    for (const auto& [u, v] : g.edge)
      if (uf.unite(u, v)) --comps;
    if (comps != 1) throw std::invalid_argument("graph is disconnected");
  }

  if (!unit.empty()) {
    if (static_cast<int>(unit.size()) != n) throw std::invalid_argument("unit length mismatch");
    int maxu = -1;
    for (int u : unit) {
      if (u < 0) throw std::invalid_argument("vertex missing unit assignment");
      maxu = std::max(maxu, u);
    }
    if (unit_names.empty()) {
      unit_names.resize(maxu + 1);
      for (int i = 0; i <= maxu; ++i) unit_names[i] = std::to_string(i);
    }
    if (maxu >= static_cast<int>(unit_names.size()))
      throw std::invalid_argument("unit index out of range");
    g.unit = std::move(unit);
    g.unit_names = std::move(unit_names);

    // Each unit's induced subgraph must be connected.
    UnionFind uf(n);
    for (const auto& [u, v] : g.edge)
      if (g.unit[u] == g.unit[v]) uf.unite(u, v);
    std::vector<int> root(g.num_units(), -1);
    for (int v = 0; v < n; ++v) {
      const int a = g.unit[v];
      const int r = uf.find(v);
      if (root[a] == -1)
        root[a] = r;
      else if (root[a] != r)
        throw std::invalid_argument("administrative unit '" + g.unit_names[a] +
                                    "' is disconnected");
    }
  }
  return g;
}

bool connected_subset(const MapGraph& g, std::span<const int> verts) {
  if (verts.empty()) return false;
  if (verts.size() == 1) return true;
  std::vector<char> in(g.n(), 0), seen(g.n(), 0);
  for (int v : verts) in[v] = 1;
  std::vector<int> stack{verts[0]};
  seen[verts[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == verts.size();
}

}  // namespace gsmc
