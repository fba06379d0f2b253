#include "gsmc/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsmc {

namespace {

// Depth-first selection over edge indices with cycle pruning: at depth d the
// forest has d edges; extend with any later edge joining two components.
void spanning_tree_rec(int n, const std::vector<std::pair<int, int>>& edges, int next_edge,
                       std::vector<int>& chosen, std::vector<int>& parent,
                       const std::function<void(const std::vector<int>&)>& sink) {
  if (static_cast<int>(chosen.size()) == n - 1) {
    sink(chosen);
    return;
  }
  const int need = n - 1 - static_cast<int>(chosen.size());
  for (int e = next_edge; e + need <= static_cast<int>(edges.size()); ++e) {
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const int ru = find(edges[e].first), rv = find(edges[e].second);
    if (ru == rv) continue;
    parent[ru] = rv;
    chosen.push_back(e);
    spanning_tree_rec(n, edges, e + 1, chosen, parent, sink);
    chosen.pop_back();
    // Union by naive root reassignment is not reversible via rank, so redo
    // the structure from the chosen set.
    for (int i = 0; i < n; ++i) parent[i] = i;
    for (int c : chosen) {
      int a = find(edges[c].first), b = find(edges[c].second);
      if (a != b) parent[a] = b;
    }
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_spanning_trees(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  std::vector<int> chosen, parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  spanning_tree_rec(n, edges, 0, chosen, parent,
                    [&out](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

std::int64_t count_spanning_trees_brute(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 1) return 1;
  std::int64_t count = 0;
  std::vector<int> chosen, parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  spanning_tree_rec(n, edges, 0, chosen, parent,
                    [&count](const std::vector<int>&) { ++count; });
  return count;
}

namespace {

struct PlanSearch {
  const MapGraph& g;
  const DistrictingScheme& scheme;
  const EnumerateOptions& opt;
  const std::function<void(const Plan&)>& sink;

  std::vector<int> assign;    // -1 = unassigned
  std::vector<int> sizes;
  std::vector<char> visited;  // in the growing region, its frontier, or banned
  int lo_size, hi_size;       // allowed seats per region

  PlanSearch(const MapGraph& g_, const DistrictingScheme& scheme_, const EnumerateOptions& opt_,
             const std::function<void(const Plan&)>& sink_)
      : g(g_), scheme(scheme_), opt(opt_), sink(sink_) {
    assign.assign(g.n(), -1);
    visited.assign(g.n(), 0);
    if (opt.num_regions == scheme.D) {
      lo_size = scheme.d_min;
      hi_size = scheme.d_max;
    } else {
      lo_size = 1;
      hi_size = scheme.S - (opt.num_regions - 1);
    }
  }

  // Seats s admissible for a region of population p, given seats_left overall
  // and regions_left regions still to place (this one included).
  bool pop_fits(std::int64_t p, int s) const {
    const double pd = static_cast<double>(p);
    return pd >= s * opt.per_seat_min && pd <= s * opt.per_seat_max;
  }

  // Every connected component of the unassigned remainder must admit a seat
  // interval, the intervals must cover seats_left, and there must be at most
  // regions_left components and at least one vertex per region.
  bool remainder_feasible(int seats_left, int regions_left) const {
    if (regions_left == 0) {
      for (int v = 0; v < g.n(); ++v)
        if (assign[v] == -1) return false;
      return seats_left == 0;
    }
    std::vector<int> comp(g.n(), -1);
    int ncomp = 0, unassigned = 0;
    std::vector<std::int64_t> cpop;
    std::vector<int> stack;
    for (int v = 0; v < g.n(); ++v) {
      if (assign[v] != -1 || comp[v] != -1) continue;
      ++ncomp;
      cpop.push_back(0);
      stack.push_back(v);
      comp[v] = ncomp - 1;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++unassigned;
        cpop.back() += g.pop[u];
        for (int w : g.neighbors(u))
          if (assign[w] == -1 && comp[w] == -1) {
            comp[w] = ncomp - 1;
            stack.push_back(w);
          }
      }
    }
    if (ncomp == 0 || ncomp > regions_left || unassigned < regions_left) return false;
    long long lo_sum = 0, hi_sum = 0;
    for (std::int64_t p : cpop) {
      const double pd = static_cast<double>(p);
      // s >= pd / P+ ; s <= pd / P- (unbounded when P- == 0)
      int lo = opt.per_seat_max > 0 ? static_cast<int>(std::ceil(pd / opt.per_seat_max - 1e-9)) : 1;
      lo = std::max(lo, lo_size);
      int hi = opt.per_seat_min > 0 ? static_cast<int>(std::floor(pd / opt.per_seat_min + 1e-9))
                                    : seats_left;
      hi = std::min(hi, seats_left);
      if (hi < lo) return false;
      lo_sum += lo;
      hi_sum += hi;
    }
    return lo_sum <= seats_left && seats_left <= hi_sum;
  }

  void emit_region(int region, int seats_used, std::int64_t pop) {
    const int regions_left = opt.num_regions - region - 1;
    const int seats_left_total = scheme.S - seats_used;
    for (int s = lo_size; s <= hi_size; ++s) {
      if (s > seats_left_total - regions_left * lo_size) break;
      if (seats_left_total - s > regions_left * hi_size) continue;
      if (!pop_fits(pop, s)) continue;
      sizes.push_back(s);
      if (regions_left == 0) {
        bool done = true;
        for (int v = 0; v < g.n() && done; ++v)
          if (assign[v] == -1) done = false;
        if (done) {
          Plan p;
          p.assign = assign;
          p.sizes = sizes;
          if (!opt.filter_schedule ||
              multiset_schedule_valid(scheme, opt.schedule, p.sizes))
            sink(p);
        }
      } else if (remainder_feasible(seats_left_total - s, regions_left)) {
        next_region(region + 1, seats_used + s);
      }
      sizes.pop_back();
    }
  }

  void next_region(int region, int seats_used) {
    int seed = -1;
    for (int v = 0; v < g.n(); ++v)
      if (assign[v] == -1) {
        seed = v;
        break;
      }
    if (seed == -1) return;
    // Bans belong to one region's enumeration only; later regions pick from
    // all unassigned vertices.
    std::vector<char> saved;
    saved.swap(visited);
    visited.assign(g.n(), 0);
    assign[seed] = region;
    visited[seed] = 1;
    std::vector<int> frontier;
    for (int w : g.neighbors(seed))
      if (assign[w] == -1) {
        visited[w] = 1;
        frontier.push_back(w);
      }
    grow(region, seats_used, g.pop[seed], frontier);
    assign[seed] = -1;
    visited = std::move(saved);
  }

  // Enumerate each connected superset exactly once: frontier vertices are
  // consumed left to right, and a consumed vertex stays banned (visited) for
  // the rest of this subtree.
  void grow(int region, int seats_used, std::int64_t pop, const std::vector<int>& frontier) {
    emit_region(region, seats_used, pop);
    const double max_pop = static_cast<double>(hi_size) * opt.per_seat_max;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int v = frontier[i];
      if (static_cast<double>(pop + g.pop[v]) > max_pop) continue;  // stays banned
      assign[v] = region;
      std::vector<int> next(frontier.begin() + i + 1, frontier.end());
      std::vector<int> added;
      for (int w : g.neighbors(v))
        if (assign[w] == -1 && !visited[w]) {
          visited[w] = 1;
          next.push_back(w);
          added.push_back(w);
        }
      grow(region, seats_used, pop + g.pop[v], next);
      for (int w : added) visited[w] = 0;
      assign[v] = -1;
    }
  }
};

}  // namespace

void enumerate_plans(const MapGraph& g, const DistrictingScheme& scheme,
                     const EnumerateOptions& opt, const std::function<void(const Plan&)>& sink) {
  if (opt.num_regions < 1 || opt.num_regions > g.n())
    throw std::invalid_argument("region count out of range");
  if (opt.per_seat_max < opt.per_seat_min)
    throw std::invalid_argument("malformed population bounds");
  PlanSearch search(g, scheme, opt, sink);
  search.next_region(0, 0);
}

std::vector<Plan> enumerate_plans(const MapGraph& g, const DistrictingScheme& scheme,
                                  const EnumerateOptions& opt) {
  std::vector<Plan> out;
  enumerate_plans(g, scheme, opt, [&out](const Plan& p) { out.push_back(p); });
  return out;
}

}  // namespace gsmc
