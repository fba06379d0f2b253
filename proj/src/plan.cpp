#include "gsmc/plan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gsmc/util.hpp"

namespace gsmc {

namespace {

void check_region(const Plan& plan, int k) {
  if (k < 0 || k >= plan.regions()) throw std::invalid_argument("region index out of range");
}

}  // namespace

Plan Plan::canonical() const {
  const int r = regions();
  std::vector<int> relabel(r, -1);
  int next = 0;
  for (int v = 0; v < static_cast<int>(assign.size()); ++v) {
    const int k = assign[v];
    if (relabel[k] == -1) relabel[k] = next++;
  }
  Plan out;
  out.assign.resize(assign.size());
  out.sizes.assign(r, 0);
  for (std::size_t v = 0; v < assign.size(); ++v) out.assign[v] = relabel[assign[v]];
  for (int k = 0; k < r; ++k) out.sizes[relabel[k]] = sizes[k];
  return out;
}

std::uint64_t Plan::canonical_hash() const {
  const Plan c = canonical();
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  for (int a : c.assign) mix(static_cast<std::uint64_t>(a));
  for (int s : c.sizes) mix(static_cast<std::uint64_t>(s) ^ 0x9e3779b97f4a7c15ull);
  return h;
}

std::vector<int> region_vertices(const Plan& plan, int k) {
  check_region(plan, k);
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(plan.assign.size()); ++v)
    if (plan.assign[v] == k) out.push_back(v);
  return out;
}

std::vector<std::int64_t> region_pops(const MapGraph& g, const Plan& plan) {
  std::vector<std::int64_t> out(plan.regions(), 0);
  for (int v = 0; v < g.n(); ++v) out[plan.assign[v]] += g.pop[v];
  return out;
}

bool plan_valid(const MapGraph& g, const Plan& plan) {
  const int r = plan.regions();
  if (static_cast<int>(plan.assign.size()) != g.n() || r == 0) return false;
  std::vector<int> count(r, 0);
  for (int a : plan.assign) {
    if (a < 0 || a >= r) return false;
    count[a]++;
  }
  for (int k = 0; k < r; ++k)
    if (count[k] == 0 || plan.sizes[k] <= 0) return false;

  UnionFind uf(g.n());
  std::vector<int> comps_left = count;
  for (const auto& [u, v] : g.edge)
    if (plan.assign[u] == plan.assign[v] && uf.unite(u, v)) comps_left[plan.assign[u]]--;
  for (int k = 0; k < r; ++k)
    if (comps_left[k] != 1) return false;
  return true;
}

std::vector<int> boundary_edges(const MapGraph& g, const Plan& plan, int k, int k2) {
  check_region(plan, k);
  check_region(plan, k2);
  if (k == k2) throw std::invalid_argument("boundary of a region with itself");
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edge[e];
    const int a = plan.assign[u], b = plan.assign[v];
    if ((a == k && b == k2) || (a == k2 && b == k)) out.push_back(e);
  }
  return out;
}

std::vector<std::tuple<int, int, int>> adjacent_region_pairs(const MapGraph& g, const Plan& plan) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& [u, v] : g.edge) {
    int a = plan.assign[u], b = plan.assign[v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    counts[{a, b}]++;
  }
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(counts.size());
  for (const auto& [key, c] : counts) out.emplace_back(key.first, key.second, c);
  return out;
}

Plan merge_regions(const MapGraph& g, const Plan& plan, int k, int k2) {
  check_region(plan, k);
  check_region(plan, k2);
  if (k == k2) throw std::invalid_argument("cannot merge a region with itself");
  const int lo = std::min(k, k2), hi = std::max(k, k2);
  bool adjacent = false;
  for (const auto& [u, v] : g.edge) {
    const int a = plan.assign[u], b = plan.assign[v];
    if ((a == lo && b == hi) || (a == hi && b == lo)) {
      adjacent = true;
      break;
    }
  }
  if (!adjacent) throw std::domain_error("regions are not adjacent");

  Plan out;
  out.assign.resize(plan.assign.size());
  for (std::size_t v = 0; v < plan.assign.size(); ++v) {
    int a = plan.assign[v];
    if (a == hi)
      a = lo;
    else if (a > hi)
      a -= 1;
    out.assign[v] = a;
  }
  out.sizes.reserve(plan.regions() - 1);
  for (int i = 0; i < plan.regions(); ++i) {
    if (i == hi) continue;
    out.sizes.push_back(i == lo ? plan.sizes[lo] + plan.sizes[hi] : plan.sizes[i]);
  }
  return out;
}

QuotientMultigraph quotient_multigraph(const MapGraph& g, const Plan& plan) {
  QuotientMultigraph q;
  q.n = plan.regions();
  for (const auto& [u, v] : g.edge) {
    int a = plan.assign[u], b = plan.assign[v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    q.mult[{a, b}]++;
  }
  return q;
}

EdgesRemoved edges_removed(const MapGraph& g, const Plan& plan) {
  int cut = 0;
  for (const auto& [u, v] : g.edge)
    if (plan.assign[u] != plan.assign[v]) ++cut;
  return {static_cast<double>(cut) / static_cast<double>(g.m()), cut};
}

int admin_splits(const MapGraph& g, const Plan& plan) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  // Components of every (unit ∩ region) in one union-find pass.
  UnionFind uf(g.n());
  int pieces = g.n();
  for (const auto& [u, v] : g.edge)
    if (g.unit[u] == g.unit[v] && plan.assign[u] == plan.assign[v] && uf.unite(u, v)) --pieces;
  return pieces - g.num_units();
}

}  // namespace gsmc
