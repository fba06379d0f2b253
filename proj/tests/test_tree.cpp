#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "gsmc/enumerate.hpp"
#include "gsmc/rng.hpp"
#include "gsmc/tree.hpp"

using namespace gsmc;
using gsmc::testing::cycle;
using gsmc::testing::grid;
using gsmc::testing::path;

namespace {

std::vector<int> all_verts(const MapGraph& g) {
  std::vector<int> v(g.n());
  for (int i = 0; i < g.n(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("wilson on trivial inputs", "[tree]") {
  const MapGraph p3 = path(3);
  RngStream rng(1, StreamKind::misc, 0, 0);

  const std::vector<int> single{1};
  auto t1 = wilson_tree(p3, single, 1, rng);
  CHECK(t1.n() == 1);
  CHECK(t1.verts == single);
  CHECK(t1.parent == std::vector<int>{-1});

  // P3 has exactly one spanning tree.
  auto t3 = wilson_tree(p3, all_verts(p3), 1, rng);
  auto edges = t3.edges();
  std::set<std::pair<int, int>> es(edges.begin(), edges.end());
  CHECK(es == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});

  const std::vector<int> disconnected{0, 2};
  CHECK_THROWS_AS(wilson_tree(p3, disconnected, 1, rng), std::domain_error);
}

TEST_CASE("wilson samples C4 spanning trees uniformly", "[tree]") {
  const MapGraph c4 = cycle(4);
  RngStream rng(2024, StreamKind::misc, 0, 7);
  std::map<std::set<std::pair<int, int>>, int> freq;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    auto t = wilson_tree(c4, all_verts(c4), 1, rng);
    auto e = t.edges();
    freq[std::set<std::pair<int, int>>(e.begin(), e.end())]++;
  }
  REQUIRE(freq.size() == 4);
  for (const auto& [tree, count] : freq)
    CHECK(std::abs(count / static_cast<double>(n) - 0.25) < 0.02);
}

TEST_CASE("matrix-tree log counts", "[tree]") {
  const MapGraph c4 = cycle(4);
  CHECK(log_spanning_tree_count(c4) == Catch::Approx(std::log(4.0)).epsilon(1e-12));

  const MapGraph p3 = path(3);
  const std::vector<int> single{2};
  CHECK(log_spanning_tree_count(p3, single) == 0.0);
  const std::vector<int> disconnected{0, 2};
  CHECK_THROWS_AS(log_spanning_tree_count(p3, disconnected), std::domain_error);

  // 2x3 grid is a classic small case.
  const MapGraph g23 = grid(2, 3);
  const auto brute = count_spanning_trees_brute(g23.n(), g23.edge);
  CHECK(brute == 15);
  CHECK(log_spanning_tree_count(g23) ==
        Catch::Approx(std::log(static_cast<double>(brute))).epsilon(1e-10));
}

TEST_CASE("matrix-tree agrees with brute force on random graphs", "[tree]") {
  // A handful of seeds here; the acceptance suite sweeps 200.
  RngStream rng(5, StreamKind::misc, 0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.bounded(7));
    std::vector<std::pair<int, int>> edges;
    // Random spanning tree first to guarantee connectivity.
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.bounded(v)), v);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_double() < 0.35 &&
            std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end())
          edges.emplace_back(u, v);
    std::vector<std::int64_t> pops(n, 1);
    const MapGraph g = MapGraph::build({}, pops, edges);
    const auto brute = count_spanning_trees_brute(g.n(), g.edge);
    const double lg = log_spanning_tree_count(g);
    CHECK(std::abs(std::exp(lg) - static_cast<double>(brute)) <
          1e-9 * static_cast<double>(brute));
  }
}

TEST_CASE("multigraph matrix-tree", "[tree]") {
  QuotientMultigraph q;
  q.n = 2;
  q.mult[{0, 1}] = 3;
  CHECK(log_spanning_tree_count(q) == Catch::Approx(std::log(3.0)).epsilon(1e-12));

  // Triangle with one doubled edge has 5 spanning trees.
  QuotientMultigraph tri;
  tri.n = 3;
  tri.mult[{0, 1}] = 2;
  tri.mult[{1, 2}] = 1;
  tri.mult[{0, 2}] = 1;
  CHECK(log_spanning_tree_count(tri) == Catch::Approx(std::log(5.0)).epsilon(1e-12));
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 1}, {1, 2}, {0, 2}};
  CHECK(count_spanning_trees_brute(3, edges) == 5);

  QuotientMultigraph disc;
  disc.n = 3;
  disc.mult[{0, 1}] = 1;
  CHECK_THROWS_AS(log_spanning_tree_count(disc), std::domain_error);

  QuotientMultigraph one;
  one.n = 1;
  CHECK(log_spanning_tree_count(one) == 0.0);
}

TEST_CASE("tree cut enumeration on the P4 path", "[tree]") {
  const MapGraph p4 = path(4);  // unit pops, total 4, S = 2 -> per-seat 2
  RngStream rng(9, StreamKind::misc, 0, 0);
  auto t = wilson_tree(p4, all_verts(p4), 2, rng);
  const std::vector<std::pair<int, int>> sizes{{1, 1}};
  auto cuts = enumerate_tree_cuts(p4, t, sizes, 2.0, 2.0, 2.0);
  REQUIRE(cuts.size() == 3);  // (n-1) * m = 3 * 1

  int balanced = 0;
  for (const auto& c : cuts) {
    const auto [below, above] = cut_sides(t, c.cut_local);
    std::int64_t pb = 0, pa = 0;
    for (int v : below) pb += p4.pop[v];
    for (int v : above) pa += p4.pop[v];
    CHECK(pb == c.pop_below);
    CHECK(pa == c.pop_above);
    CHECK(connected_subset(p4, below));
    CHECK(connected_subset(p4, above));
    if (c.balanced) {
      ++balanced;
      CHECK(c.max_abs_dev == Catch::Approx(0.0).margin(1e-12));
      CHECK(c.pop_below == 2);
    } else {
      // End cut: populations (1,3) against per-seat target 2.
      CHECK(c.max_abs_dev == Catch::Approx(0.5));
    }
  }
  CHECK(balanced == 1);
}

TEST_CASE("tree cut counting with ordered size pairs", "[tree]") {
  const MapGraph p4 = path(4);
  RngStream rng(10, StreamKind::misc, 0, 0);
  auto t = wilson_tree(p4, all_verts(p4), 3, rng);
  const std::vector<std::pair<int, int>> sizes{{1, 2}, {2, 1}};
  auto cuts = enumerate_tree_cuts(p4, t, sizes, 0.5, 2.0, 4.0 / 3.0);
  CHECK(cuts.size() == 6);  // 3 edges x 2 ordered pairs
  // Orientations differ: the same edge scored under both seat assignments.
  CHECK(cuts[0].cut_local == cuts[1].cut_local);
  CHECK(cuts[0].size_below != cuts[1].size_below);
}
