#include "gsmc/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gsmc/util.hpp"

namespace gsmc {

namespace {

// Draws a uniform spanning tree of a weighted multigraph by loop-erased
// random walk (next hop proportional to edge multiplicity), then picks the
// concrete parallel edge uniformly. Nodes are 0..q-1; mult keyed by (lo, hi).
// Returns the chosen quotient tree as node pairs.
std::vector<std::pair<int, int>> quotient_tree(
    int q, const std::map<std::pair<int, int>, std::int64_t>& mult, RngStream& rng) {
  if (q == 1) return {};
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(q);
  for (const auto& [key, m] : mult) {
    adj[key.first].emplace_back(key.second, m);
    adj[key.second].emplace_back(key.first, m);
  }
  std::vector<std::int64_t> deg(q, 0);
  for (int u = 0; u < q; ++u)
    for (const auto& [v, m] : adj[u]) deg[u] += m;
  for (int u = 0; u < q; ++u)
    if (deg[u] == 0) throw std::domain_error("quotient multigraph is disconnected");

  std::vector<char> in_tree(q, 0);
  std::vector<int> nxt(q, -1);
  in_tree[0] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int s = 1; s < q; ++s) {
    if (in_tree[s]) continue;
    int u = s;
    while (!in_tree[u]) {
      std::int64_t pick = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(deg[u])));
      int chosen = -1;
      for (const auto& [v, m] : adj[u]) {
        if (pick < m) {
          chosen = v;
          break;
        }
        pick -= m;
      }
      nxt[u] = chosen;
      u = chosen;
    }
    u = s;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      edges.emplace_back(u, nxt[u]);
      u = nxt[u];
    }
  }
  return edges;
}

}  // namespace

RegionTree hierarchical_wilson(const MapGraph& g, std::span<const int> verts, int seats,
                               RngStream& rng) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  const int n = static_cast<int>(verts.size());
  RegionTree t;
  t.verts.assign(verts.begin(), verts.end());
  t.seats = seats;
  if (n == 0) throw std::invalid_argument("empty region");

  std::vector<int> local_of(g.n(), -1);
  for (int i = 0; i < n; ++i) local_of[verts[i]] = i;

  // Units present in the region, with their local vertex lists.
  std::map<int, std::vector<int>> unit_members;
  for (int v : verts) unit_members[g.unit[v]].push_back(v);
  std::vector<int> unit_ids;
  std::vector<int> q_of_unit(g.num_units(), -1);
  for (const auto& [a, members] : unit_members) {
    q_of_unit[a] = static_cast<int>(unit_ids.size());
    unit_ids.push_back(a);
  }
  const int q = static_cast<int>(unit_ids.size());

  // Chosen tree edges, as pairs of local indices.
  std::vector<std::pair<int, int>> chosen;
  chosen.reserve(n - 1);
  for (const auto& [a, members] : unit_members) {
    if (members.size() == 1) continue;
    RegionTree ut = wilson_tree(g, members, 1, rng);  // throws if piece disconnected
    for (const auto& [gu, gv] : ut.edges()) chosen.emplace_back(local_of[gu], local_of[gv]);
  }

  // Cross-unit edges inside the region, grouped by quotient node pair.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> lifts;
  std::map<std::pair<int, int>, std::int64_t> mult;
  for (int i = 0; i < n; ++i) {
    const int gu = verts[i];
    for (int e : g.incident_edges(gu)) {
      const auto& [x, y] = g.edge[e];
      if (x != gu) continue;  // visit each edge once, from its low endpoint
      const int j = local_of[y];
      if (j < 0) continue;
      const int qa = q_of_unit[g.unit[x]], qb = q_of_unit[g.unit[y]];
      if (qa == qb) continue;
      const auto key = std::make_pair(std::min(qa, qb), std::max(qa, qb));
      lifts[key].emplace_back(local_of[x], j);
      mult[key] += 1;
    }
  }

  for (const auto& [qa, qb] : quotient_tree(q, mult, rng)) {
    const auto key = std::make_pair(std::min(qa, qb), std::max(qa, qb));
    const auto& options = lifts.at(key);
    chosen.push_back(options[rng.bounded(options.size())]);
  }

  // Assemble parent pointers from the edge set, rooted at local 0.
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : chosen) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  t.parent.assign(n, -2);
  t.order.clear();
  t.order.reserve(n);
  t.root = 0;
  t.parent[0] = -1;
  t.order.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const int u = t.order[head];
    for (int w : adj[u])
      if (t.parent[w] == -2) {
        t.parent[w] = u;
        t.order.push_back(w);
      }
  }
  if (static_cast<int>(t.order.size()) != n)
    throw std::domain_error("region is not hierarchically connected");
  return t;
}

double log_tau_eta(const MapGraph& g, std::span<const int> verts) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  std::map<int, std::vector<int>> unit_members;
  for (int v : verts) unit_members[g.unit[v]].push_back(v);
  std::vector<int> q_of_unit(g.num_units(), -1);
  int q = 0;
  for (const auto& [a, members] : unit_members) q_of_unit[a] = q++;

  double total = 0.0;
  for (const auto& [a, members] : unit_members)
    total += log_spanning_tree_count(g, members);  // throws if a piece is split

  std::vector<char> in(g.n(), 0);
  for (int v : verts) in[v] = 1;
  QuotientMultigraph quo;
  quo.n = q;
  for (const auto& [u, v] : g.edge) {
    if (!in[u] || !in[v]) continue;
    const int qa = q_of_unit[g.unit[u]], qb = q_of_unit[g.unit[v]];
    if (qa != qb) quo.mult[{std::min(qa, qb), std::max(qa, qb)}] += 1;
  }
  total += log_spanning_tree_count(quo);  // throws if quotient disconnected
  return total;
}

bool hierarchically_connected(const MapGraph& g, const Plan& plan) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  UnionFind uf(g.n());
  for (std::size_t e = 0; e < g.edge.size(); ++e) {
    const auto& [u, v] = g.edge[e];
    if (plan.assign[u] == plan.assign[v] && g.unit[u] == g.unit[v]) uf.unite(u, v);
  }
  const int cells = plan.regions() * g.num_units();
  std::vector<int> root_of(cells, -1);
  for (int v = 0; v < g.n(); ++v) {
    const int cell = plan.assign[v] * g.num_units() + g.unit[v];
    const int r = uf.find(v);
    if (root_of[cell] == -1)
      root_of[cell] = r;
    else if (root_of[cell] != r)
      return false;
  }
  return true;
}

std::vector<int> admin_adjacency_components(const MapGraph& g, const Plan& plan) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  UnionFind uf(plan.regions());
  for (const auto& [u, v] : g.edge)
    if (plan.assign[u] != plan.assign[v] && g.unit[u] == g.unit[v])
      uf.unite(plan.assign[u], plan.assign[v]);
  std::vector<int> comp(plan.regions(), -1);
  int c = 0;
  for (int k = 0; k < plan.regions(); ++k) {
    const int r = uf.find(k);
    if (comp[r] == -1) comp[r] = c++;
    comp[k] = comp[r];
  }
  return comp;
}

bool admin_adjacent(const MapGraph& g, const Plan& plan, int k1, int k2) {
  for (const auto& [u, v] : g.edge) {
    const int a = plan.assign[u], b = plan.assign[v];
    if (((a == k1 && b == k2) || (a == k2 && b == k1)) && g.unit[u] == g.unit[v]) return true;
  }
  return false;
}

bool is_hierarchical_plan(const MapGraph& g, const Plan& plan) {
  if (!hierarchically_connected(g, plan)) return false;
  const auto comp = admin_adjacency_components(g, plan);
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  return admin_splits(g, plan) == plan.regions() - ncomp;
}

std::vector<int> hierarchical_boundary(const MapGraph& g, const Plan& plan, int k1, int k2) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  std::vector<char> in1(g.num_units(), 0), in2(g.num_units(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (plan.assign[v] == k1) in1[g.unit[v]] = 1;
    if (plan.assign[v] == k2) in2[g.unit[v]] = 1;
  }
  int shared = -1, nshared = 0;
  for (int a = 0; a < g.num_units(); ++a)
    if (in1[a] && in2[a]) {
      shared = a;
      ++nshared;
    }
  if (nshared >= 2) return {};
  std::vector<int> out;
  for (std::size_t e = 0; e < g.edge.size(); ++e) {
    const auto& [u, v] = g.edge[e];
    const int a = plan.assign[u], b = plan.assign[v];
    if (!((a == k1 && b == k2) || (a == k2 && b == k1))) continue;
    if (nshared == 1 && !(g.unit[u] == shared && g.unit[v] == shared)) continue;
    out.push_back(static_cast<int>(e));
  }
  return out;
}

bool hierarchically_adjacent(const MapGraph& g, const Plan& plan, int k1, int k2) {
  bool adjacent = false;
  for (const auto& [u, v] : g.edge) {
    const int a = plan.assign[u], b = plan.assign[v];
    if ((a == k1 && b == k2) || (a == k2 && b == k1)) {
      adjacent = true;
      if (g.unit[u] == g.unit[v]) return true;  // administratively adjacent
    }
  }
  if (!adjacent) return false;
  const auto comp = admin_adjacency_components(g, plan);
  return comp[k1] != comp[k2];
}

double log_hier_linking_edge_count(const MapGraph& g, const Plan& plan) {
  if (!is_hierarchical_plan(g, plan)) throw std::domain_error("plan is not hierarchical");
  const auto comp = admin_adjacency_components(g, plan);
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

  // Within components: same-unit cross-region edges; across: everything else.
  std::vector<QuotientMultigraph> inner(ncomp);
  std::vector<int> local(plan.regions(), -1), csize(ncomp, 0);
  for (int k = 0; k < plan.regions(); ++k) local[k] = csize[comp[k]]++;
  for (int c = 0; c < ncomp; ++c) inner[c].n = csize[c];
  QuotientMultigraph outer;
  outer.n = ncomp;
  for (const auto& [u, v] : g.edge) {
    const int a = plan.assign[u], b = plan.assign[v];
    if (a == b) continue;
    if (comp[a] == comp[b]) {
      if (g.unit[u] == g.unit[v]) {
        const auto key = std::make_pair(std::min(local[a], local[b]), std::max(local[a], local[b]));
        inner[comp[a]].mult[key] += 1;
      }
    } else {
      const auto key = std::make_pair(std::min(comp[a], comp[b]), std::max(comp[a], comp[b]));
      outer.mult[key] += 1;
    }
  }
  double total = log_spanning_tree_count(outer);
  for (const auto& q : inner) total += log_spanning_tree_count(q);
  return total;
}

}  // namespace gsmc
