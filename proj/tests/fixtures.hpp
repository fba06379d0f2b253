#pragma once

// Small graph builders shared across the test suite.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsmc/graph.hpp"
#include "gsmc/plan.hpp"

namespace gsmc::testing {

// Rectangular grid, row-major vertex order, unit populations by default.
inline MapGraph grid(int rows, int cols, std::int64_t vertex_pop = 1,
                     std::vector<int> unit = {}, std::vector<std::string> unit_names = {}) {
  const int n = rows * cols;
  std::vector<std::int64_t> pops(n, vertex_pop);
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return MapGraph::build({}, std::move(pops), std::move(edges), std::move(unit),
                         std::move(unit_names));
}

inline MapGraph path(int n, std::vector<std::int64_t> pops = {}) {
  if (pops.empty()) pops.assign(n, 1);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return MapGraph::build({}, std::move(pops), std::move(edges));
}

inline MapGraph cycle(int n, std::int64_t vertex_pop = 1) {
  std::vector<std::int64_t> pops(n, vertex_pop);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return MapGraph::build({}, std::move(pops), std::move(edges));
}

inline Plan make_plan(std::vector<int> assign, std::vector<int> sizes) {
  Plan p;
  p.assign = std::move(assign);
  p.sizes = std::move(sizes);
  return p;
}

}  // namespace gsmc::testing
