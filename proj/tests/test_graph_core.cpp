#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "spanner/apsp.hpp"
#include "spanner/dijkstra.hpp"
#include "spanner/graph.hpp"
#include "spanner/mst.hpp"
#include "spanner/validate.hpp"

using namespace spanner;

namespace {

Graph random_graph(int32_t n, double p, bool weighted, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int32_t> wgt(1, 10);
  std::vector<Edge> edges;
  for (int32_t u = 0; u < n; ++u)
    for (int32_t v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.push_back({u, v, double(wgt(rng))});
  return Graph(n, std::move(edges), weighted);
}

// Minimum spanning forest weight by enumerating all edge subsets of size
// n - #components that span every component.
double brute_msf_weight(const Graph& g) {
  const int32_t m = g.m();
  const int32_t need = g.n() - components(g).count;
  if (need == 0) return 0.0;
  std::vector<int32_t> idx(static_cast<size_t>(need));
  std::iota(idx.begin(), idx.end(), 0);
  double best = oracle::kInf;
  while (true) {
    oracle::Dsu dsu(g.n());
    int32_t merges = 0;
    double w = 0.0;
    for (int32_t i : idx) {
      if (dsu.unite(g.edge(i).u, g.edge(i).v)) ++merges;
      w += g.weight(i);
    }
    if (merges == need) best = std::min(best, w);
    int32_t i = need - 1;
    while (i >= 0 && idx[size_t(i)] == m - need + i) --i;
    if (i < 0) break;
    ++idx[size_t(i)];
    for (int32_t j = i + 1; j < need; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
  }
  return best;
}

Graph cycle_graph(int32_t n) {
  std::vector<Edge> edges;
  for (int32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges), false);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input", "[graph]") {
  CHECK_THROWS_AS(Graph(-1, {}, false), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}, false), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, -1, 1.0}}, false), GraphError);
  CHECK_THROWS_AS(Graph(2, {{1, 1, 1.0}}, false), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}, true), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}, true), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, -3.0}}, true), GraphError);
  CHECK_NOTHROW(Graph(2, {{0, 1, 0.0}}, false));  // unweighted ignores w
}

TEST_CASE("graph canonicalizes endpoints and adjacency", "[graph]") {
  Graph g(3, {{2, 0, 4.0}, {1, 2, 2.0}}, true);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 2);
  CHECK(g.weight(0) == 4.0);
  CHECK(g.degree(2) == 2);
  CHECK(g.degree(1) == 1);
  CHECK(g.total_weight() == 6.0);

  Graph u = g.without_weights();
  CHECK_FALSE(u.weighted());
  CHECK(u.weight(0) == 1.0);
  CHECK(u.total_weight() == 2.0);
}

TEST_CASE("spanner edge set bookkeeping", "[graph]") {
  Graph g(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}}, true);
  Spanner s = Spanner::empty(g, 2.0);
  CHECK(s.size() == 0);
  CHECK(s.alpha() == 2.0);
  s.add(1);
  s.add(1);  // idempotent
  CHECK(s.size() == 1);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(0));
  CHECK(s.total_weight() == 2.0);
  CHECK(s.edge_ids() == std::vector<int32_t>{1});

  Spanner f = Spanner::full(g, 3.0);
  CHECK(f.size() == 3);
  CHECK(f.total_weight() == 6.0);
}

TEST_CASE("bounded dijkstra cuts the search at the bound", "[dijkstra]") {
  // path a-b-c, weights 1,1; src=a, bound=1 -> dist(b)=1, c unreached
  Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, true);
  DijkstraResult r = dijkstra_bounded(g, 0, 1.0);
  CHECK(r.dist[0] == 0.0);
  CHECK(r.dist[1] == 1.0);
  CHECK(r.dist[2] == kInf);
  CHECK(r.pred_edge[1] == 0);
  CHECK(r.pred_edge[2] == -1);
}

TEST_CASE("dijkstra from an isolated vertex", "[dijkstra]") {
  Graph g(4, {{1, 2, 1.0}, {2, 3, 1.0}}, true);
  DijkstraResult r = dijkstra_bounded(g, 0);
  CHECK(r.dist[0] == 0.0);
  for (int32_t v = 1; v < 4; ++v) CHECK(r.dist[size_t(v)] == kInf);
}

TEST_CASE("unbounded dijkstra matches bellman-ford", "[dijkstra]") {
  std::mt19937_64 rng(20240501);
  for (int32_t trial = 0; trial < 50; ++trial) {
    int32_t n = 2 + int32_t(rng() % 19);
    Graph g = random_graph(n, 0.4, true, rng);
    int32_t src = int32_t(rng() % uint64_t(n));
    DijkstraResult r = dijkstra_bounded(g, src);
    std::vector<double> bf = oracle::bellman_ford(g, src);
    for (int32_t v = 0; v < n; ++v)
      CHECK(r.dist[size_t(v)] == bf[size_t(v)]);
  }
}

TEST_CASE("dijkstra honors the edge mask", "[dijkstra]") {
  Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 5.0}}, true);
  EdgeMask mask{1, 0, 1};  // drop the middle edge
  DijkstraResult r = dijkstra_bounded(g, 0, kInf, &mask);
  CHECK(r.dist[2] == 5.0);
  std::vector<double> bf = oracle::bellman_ford(g, 0, &mask);
  CHECK(r.dist[2] == bf[2]);
}

TEST_CASE("bfs depth limit", "[bfs]") {
  SECTION("star center, k=1") {
    Graph g(5, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}}, false);
    BfsResult r = bfs_depth_limited(g, 0, 1);
    for (int32_t v = 1; v < 5; ++v) {
      CHECK(r.hops[size_t(v)] == 1);
      CHECK(r.first_edge[size_t(v)] == v - 1);
    }
  }
  SECTION("path of 5, src=end, k=2 reaches 3 vertices") {
    Graph g(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}}, false);
    BfsResult r = bfs_depth_limited(g, 0, 2);
    int32_t reached = 0;
    for (int32_t v = 0; v < 5; ++v)
      if (r.hops[size_t(v)] >= 0) ++reached;
    CHECK(reached == 3);
    CHECK(r.hops[2] == 2);
    CHECK(r.hops[3] == -1);
    CHECK(r.first_edge[2] == 0);
  }
  SECTION("k=n equals unit-weight distances") {
    std::mt19937_64 rng(7);
    for (int32_t trial = 0; trial < 20; ++trial) {
      int32_t n = 2 + int32_t(rng() % 15);
      Graph g = random_graph(n, 0.3, false, rng);
      int32_t src = int32_t(rng() % uint64_t(n));
      BfsResult r = bfs_depth_limited(g, src, n);
      std::vector<double> bf = oracle::bellman_ford(g, src);
      for (int32_t v = 0; v < n; ++v) {
        if (bf[size_t(v)] == oracle::kInf)
          CHECK(r.hops[size_t(v)] == -1);
        else
          CHECK(double(r.hops[size_t(v)]) == bf[size_t(v)]);
      }
    }
  }
}

TEST_CASE("apsp on a unit triangle", "[apsp]") {
  Graph g = cycle_graph(3);
  DistanceMatrix d = apsp(g);
  for (int32_t u = 0; u < 3; ++u)
    for (int32_t v = 0; v < 3; ++v) {
      if (u == v) {
        CHECK(d.dist(u, v) == 0.0);
        CHECK(d.hops(u, v) == 0);
      } else {
        CHECK(d.dist(u, v) == 1.0);
        CHECK(d.hops(u, v) == 1);
      }
    }
}

TEST_CASE("apsp on a weighted square with diagonal shortcut", "[apsp]") {
  // 0-1-2-3-0 cycle weights 1,1,1,1 plus diagonal 0-2 weight 1.5
  Graph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}, {0, 2, 1.5}},
          true);
  DistanceMatrix d = apsp(g);
  CHECK(d.dist(0, 2) == 1.5);
  CHECK(d.hops(0, 2) == 1);  // the diagonal beats both 2-hop paths
  CHECK(d.dist(1, 3) == 2.0);
  CHECK(d.hops(1, 3) == 2);
  CHECK(d.dist(0, 1) == 1.0);

  oracle::ApspTables t = oracle::floyd_warshall(g);
  for (int32_t u = 0; u < 4; ++u)
    for (int32_t v = 0; v < 4; ++v) {
      CHECK(d.dist(u, v) == t.d(u, v));
      CHECK(d.hops(u, v) == t.h(u, v));
    }
}

TEST_CASE("apsp reports disconnected pairs as infinity with zero hops", "[apsp]") {
  Graph g(4, {{0, 1, 2.0}, {2, 3, 1.0}}, true);
  DistanceMatrix d = apsp(g);
  CHECK(d.dist(0, 2) == kInf);
  CHECK(d.hops(0, 2) == 0);
  CHECK(d.dist(1, 3) == kInf);
  CHECK(d.hops(1, 3) == 0);

  Graph u = g.without_weights();  // BFS path hits the same convention
  DistanceMatrix du = apsp(u);
  CHECK(du.dist(0, 3) == kInf);
  CHECK(du.hops(0, 3) == 0);
}

TEST_CASE("apsp matches floyd-warshall and dijkstra rows", "[apsp]") {
  std::mt19937_64 rng(991);
  for (int32_t trial = 0; trial < 30; ++trial) {
    int32_t n = 2 + int32_t(rng() % 14);
    bool weighted = trial % 2 == 0;
    Graph g = random_graph(n, 0.35, weighted, rng);
    DistanceMatrix d = apsp(g);
    oracle::ApspTables t = oracle::floyd_warshall(g);
    double maxw = 0.0;
    for (int32_t e = 0; e < g.m(); ++e) maxw = std::max(maxw, g.weight(e));
    for (int32_t u = 0; u < n; ++u) {
      DijkstraResult row = dijkstra_bounded(g, u);
      for (int32_t v = 0; v < n; ++v) {
        CHECK(d.dist(u, v) == t.d(u, v));
        CHECK(d.hops(u, v) == t.h(u, v));
        CHECK(d.dist(u, v) == row.dist[size_t(v)]);
        // hops bounds: at most n-1, at least dist / max edge weight
        CHECK(d.hops(u, v) <= n - 1);
        if (d.dist(u, v) != kInf && d.dist(u, v) > 0.0)
          CHECK(double(d.hops(u, v)) >= d.dist(u, v) / maxw - 1e-9);
      }
    }
  }
}

TEST_CASE("apsp respects the edge mask", "[apsp]") {
  Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, false);
  EdgeMask mask{1, 1, 0};
  DistanceMatrix d = apsp(g, &mask);
  CHECK(d.dist(0, 2) == 2.0);
  CHECK(d.hops(0, 2) == 2);
}

TEST_CASE("mst weight basics", "[mst]") {
  SECTION("triangle weights 1,2,3") {
    Graph g(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}, true);
    CHECK(mst_weight(g) == 3.0);
  }
  SECTION("tree keeps every edge") {
    Graph g(5, {{0, 1, 4.0}, {1, 2, 5.0}, {1, 3, 6.0}, {3, 4, 7.0}}, true);
    CHECK(mst_weight(g) == 22.0);
  }
  SECTION("unweighted forest weight is n minus component count") {
    Graph g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}}, false);
    CHECK(mst_weight(g) == 6.0 - 3.0);
  }
}

TEST_CASE("mst weight equals brute force on small graphs", "[mst]") {
  std::mt19937_64 rng(5150);
  for (int32_t trial = 0; trial < 40; ++trial) {
    int32_t n = 2 + int32_t(rng() % 7);
    Graph g = random_graph(n, 0.5, true, rng);
    double w = mst_weight(g);
    CHECK(w == brute_msf_weight(g));
    CHECK(w == oracle::prim_msf_weight(g));
    CHECK(w <= g.total_weight() + 1e-12);
    bool forest = g.m() == g.n() - components(g).count;
    CHECK((w == g.total_weight()) == forest);
  }
}

TEST_CASE("component count and labels", "[components]") {
  SECTION("connected graph") {
    CHECK(components(cycle_graph(6)).count == 1);
  }
  SECTION("two triangles") {
    Graph g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}}, false);
    Components c = components(g);
    CHECK(c.count == 2);
    CHECK(c.label[0] == c.label[1]);
    CHECK(c.label[0] == c.label[2]);
    CHECK(c.label[3] == c.label[4]);
    CHECK(c.label[0] != c.label[3]);
  }
  SECTION("empty edge set") {
    Graph g(5, {}, false);
    Components c = components(g);
    CHECK(c.count == 5);
    for (int32_t v = 0; v < 5; ++v) CHECK(c.label[size_t(v)] == v);
  }
  SECTION("labels are dense and start at 0") {
    std::mt19937_64 rng(33);
    Graph g = random_graph(12, 0.15, false, rng);
    Components c = components(g);
    std::vector<int32_t> seen(size_t(c.count), 0);
    for (int32_t v = 0; v < g.n(); ++v) {
      REQUIRE(c.label[size_t(v)] >= 0);
      REQUIRE(c.label[size_t(v)] < c.count);
      seen[size_t(c.label[size_t(v)])] = 1;
    }
    for (int32_t i : seen) CHECK(i == 1);
  }
}

TEST_CASE("validate_spanner stretch check", "[validate]") {
  Graph c5 = cycle_graph(5);
  SECTION("identity spanner is valid for any alpha") {
    for (double alpha : {1.0, 1.5, 3.0, 100.0}) {
      Spanner s = Spanner::full(c5, alpha);
      ValidationReport rep = validate_spanner(c5, s);
      CHECK(rep.valid);
      CHECK(rep.worst_ratio == 1.0);
    }
  }
  SECTION("C5 minus one edge has stretch 4") {
    Spanner s3 = Spanner::empty(c5, 3.0);
    for (int32_t e = 1; e < 5; ++e) s3.add(e);
    ValidationReport rep = validate_spanner(c5, s3);
    CHECK_FALSE(rep.valid);
    CHECK(rep.worst_ratio == 4.0);
    CHECK(rep.worst_u == 0);
    CHECK(rep.worst_v == 1);

    Spanner s5 = Spanner::empty(c5, 5.0);
    for (int32_t e = 1; e < 5; ++e) s5.add(e);
    CHECK(validate_spanner(c5, s5).valid);
  }
  SECTION("pairs disconnected in the parent are exempt") {
    Graph g(4, {{0, 1, 1.0}, {2, 3, 1.0}}, true);
    Spanner s = Spanner::full(g, 1.0);
    CHECK(validate_spanner(g, s).valid);
  }
  SECTION("disconnecting a connected pair fails with infinite ratio") {
    Graph g(2, {{0, 1, 1.0}}, true);
    Spanner s = Spanner::empty(g, 10.0);
    ValidationReport rep = validate_spanner(g, s);
    CHECK_FALSE(rep.valid);
    CHECK(rep.worst_ratio == kInf);
  }
}

TEST_CASE("distance matrix hop invariant", "[apsp]") {
  // hops[u][v]=0 iff dist[u][v] in {0, inf}
  std::mt19937_64 rng(8800);
  for (int32_t trial = 0; trial < 20; ++trial) {
    int32_t n = 2 + int32_t(rng() % 12);
    Graph g = random_graph(n, 0.2, trial % 2 == 0, rng);
    DistanceMatrix d = apsp(g);
    for (int32_t u = 0; u < n; ++u)
      for (int32_t v = 0; v < n; ++v) {
        bool zero_hops = d.hops(u, v) == 0;
        bool degenerate = d.dist(u, v) == 0.0 || d.dist(u, v) == kInf;
        CHECK(zero_hops == degenerate);
      }
  }
}
