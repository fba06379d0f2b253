#include "gsmc/tree.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace gsmc {

namespace {

// Scratch vertex->local map reused across calls; entries are reset after use.
thread_local std::vector<int> tl_local_of;

int* local_map(int n) {
  if (static_cast<int>(tl_local_of.size()) < n) tl_local_of.assign(n, -1);
  return tl_local_of.data();
}

double log_det_spd(Eigen::MatrixXd& L, const char* what) {
  if (L.rows() == 0) return 0.0;
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt(L);
  if (llt.info() != Eigen::Success) throw std::domain_error(what);
  double out = 0.0;
  for (int i = 0; i < L.rows(); ++i) out += std::log(llt.matrixLLT()(i, i));
  return 2.0 * out;
}

}  // namespace

std::vector<std::pair<int, int>> RegionTree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(verts.size() - 1);
  for (int i = 0; i < n(); ++i) {
    if (parent[i] < 0) continue;
    int u = verts[i], v = verts[parent[i]];
    if (u > v) std::swap(u, v);
    out.emplace_back(u, v);
  }
  return out;
}

RegionTree wilson_tree(const MapGraph& g, std::span<const int> verts, int seats,
                       RngStream& rng) {
  const int n = static_cast<int>(verts.size());
  if (n == 0) throw std::domain_error("empty region");
  RegionTree t;
  t.verts.assign(verts.begin(), verts.end());
  t.parent.assign(n, -1);
  t.root = 0;
  t.seats = seats;
  if (n == 1) {
    t.order = {0};
    return t;
  }
  if (!connected_subset(g, verts)) throw std::domain_error("region subgraph is disconnected");

  int* local_of = local_map(g.n());
  for (int i = 0; i < n; ++i) local_of[verts[i]] = i;

  std::vector<char> in_tree(n, 0);
  std::vector<int> nxt(n, -1);
  in_tree[0] = 1;
  for (int start = 1; start < n; ++start) {
    if (in_tree[start]) continue;
    // Random walk from `start` until the tree is hit, remembering last exits.
    int u = start;
    while (!in_tree[u]) {
      const int gu = t.verts[u];
      int deg = 0;
      for (int w : g.neighbors(gu))
        if (local_of[w] >= 0) ++deg;
      auto pick = rng.bounded(static_cast<std::uint64_t>(deg));
      int chosen = -1;
      for (int w : g.neighbors(gu))
        if (local_of[w] >= 0 && pick-- == 0) {
          chosen = local_of[w];
          break;
        }
      nxt[u] = chosen;
      u = chosen;
    }
    // Retrace the loop-erased path and attach it.
    u = start;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      t.parent[u] = nxt[u];
      u = nxt[u];
    }
  }
  for (int i = 0; i < n; ++i) local_of[verts[i]] = -1;

  // Root-first order via child lists.
  std::vector<int> head(n, -1), sibling(n, -1);
  for (int i = 0; i < n; ++i)
    if (t.parent[i] >= 0) {
      sibling[i] = head[t.parent[i]];
      head[t.parent[i]] = i;
    }
  t.order.reserve(n);
  t.order.push_back(t.root);
  for (std::size_t q = 0; q < t.order.size(); ++q)
    for (int c = head[t.order[q]]; c >= 0; c = sibling[c]) t.order.push_back(c);
  return t;
}

double log_spanning_tree_count(const MapGraph& g, std::span<const int> verts) {
  const int n = static_cast<int>(verts.size());
  if (n == 0) throw std::domain_error("empty vertex set");
  if (n == 1) return 0.0;
  if (!connected_subset(g, verts)) throw std::domain_error("subgraph is disconnected");

  int* local_of = local_map(g.n());
  for (int i = 0; i < n; ++i) local_of[verts[i]] = i;
  // Principal minor dropping local vertex 0.
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    for (int w : g.neighbors(verts[i])) {
      const int j = local_of[w];
      if (j < 0 || j < i) continue;  // each induced edge once
      if (i > 0) L(i - 1, i - 1) += 1.0;
      if (j > 0) L(j - 1, j - 1) += 1.0;
      if (i > 0 && j > 0) {
        L(i - 1, j - 1) -= 1.0;
        L(j - 1, i - 1) -= 1.0;
      }
    }
  }
  for (int i = 0; i < n; ++i) local_of[verts[i]] = -1;
  return log_det_spd(L, "Laplacian minor not positive definite");
}

double log_spanning_tree_count(const MapGraph& g) {
  std::vector<int> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i;
  return log_spanning_tree_count(g, all);
}

double log_spanning_tree_count(const QuotientMultigraph& q) {
  if (q.n == 0) throw std::domain_error("empty multigraph");
  if (q.n == 1) return 0.0;
  {
    UnionFind uf(q.n);
    int comps = q.n;
    for (const auto& [key, mult] : q.mult)
      if (mult > 0 && uf.unite(key.first, key.second)) --comps;
    if (comps != 1) throw std::domain_error("multigraph is disconnected");
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(q.n - 1, q.n - 1);
  for (const auto& [key, mult] : q.mult) {
    const auto [i, j] = key;
    const double w = static_cast<double>(mult);
    if (i > 0) L(i - 1, i - 1) += w;
    if (j > 0) L(j - 1, j - 1) += w;
    if (i > 0 && j > 0) {
      L(i - 1, j - 1) -= w;
      L(j - 1, i - 1) -= w;
    }
  }
  return log_det_spd(L, "multigraph Laplacian minor not positive definite");
}

std::vector<TreeCut> enumerate_tree_cuts(const MapGraph& g, const RegionTree& tree,
                                         std::span<const std::pair<int, int>> ordered_sizes,
                                         double per_seat_min, double per_seat_max,
                                         double pop_per_seat) {
  const int n = tree.n();
  std::vector<std::int64_t> below(n, 0);
  for (int i = 0; i < n; ++i) below[i] = g.pop[tree.verts[i]];
  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it)
    if (tree.parent[*it] >= 0) below[tree.parent[*it]] += below[*it];
  const std::int64_t region_pop = below[tree.root];

  std::vector<TreeCut> out;
  out.reserve(static_cast<std::size_t>(n - 1) * ordered_sizes.size());
  for (int i = 0; i < n; ++i) {
    if (tree.parent[i] < 0) continue;
    const std::int64_t pb = below[i];
    const std::int64_t pa = region_pop - pb;
    for (int p = 0; p < static_cast<int>(ordered_sizes.size()); ++p) {
      const auto [sb, sa] = ordered_sizes[p];
      TreeCut c;
      c.cut_local = i;
      c.pair_index = p;
      c.size_below = sb;
      c.size_above = sa;
      c.pop_below = pb;
      c.pop_above = pa;
      const double dev_b = static_cast<double>(pb) / (sb * pop_per_seat) - 1.0;
      const double dev_a = static_cast<double>(pa) / (sa * pop_per_seat) - 1.0;
      c.max_abs_dev = std::max(std::abs(dev_b), std::abs(dev_a));
      c.balanced = static_cast<double>(pb) >= sb * per_seat_min &&
                   static_cast<double>(pb) <= sb * per_seat_max &&
                   static_cast<double>(pa) >= sa * per_seat_min &&
                   static_cast<double>(pa) <= sa * per_seat_max;
      out.push_back(c);
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> cut_sides(const RegionTree& tree, int cut_local) {
  const int n = tree.n();
  if (cut_local <= -1 || cut_local >= n || tree.parent[cut_local] < 0)
    throw std::invalid_argument("not a cuttable tree vertex");
  std::vector<char> in_below(n, 0);
  in_below[cut_local] = 1;
  // order is root-first, so one forward pass marks the whole subtree.
  for (int i : tree.order)
    if (tree.parent[i] >= 0 && in_below[tree.parent[i]]) in_below[i] = 1;
  std::pair<std::vector<int>, std::vector<int>> sides;
  for (int i = 0; i < n; ++i)
    (in_below[i] ? sides.first : sides.second).push_back(tree.verts[i]);
  return sides;
}

}  // namespace gsmc
