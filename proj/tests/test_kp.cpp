#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "spanner/kortsarz_peleg.hpp"
#include "spanner/validate.hpp"

using namespace spanner;

namespace {

Graph random_graph(int32_t n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (int32_t u = 0; u < n; ++u)
    for (int32_t v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges), false);
}

Graph complete_graph(int32_t n) {
  std::vector<Edge> edges;
  for (int32_t u = 0; u < n; ++u)
    for (int32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges), false);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int32_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
    edges.push_back({i, i + 5, 1.0});                // spoke
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});  // inner pentagram
  }
  return Graph(10, std::move(edges), false);
}

double cut_capacity(const FlowNetwork& net, const std::vector<uint8_t>& side) {
  double cap = 0.0;
  for (int32_t a = 0; a < net.arc_slots(); ++a)
    if (side[size_t(net.tail(a))] && !side[size_t(net.head(a))])
      cap += net.capacity(a);
  return cap;
}

}  // namespace

TEST_CASE("max flow on a single arc", "[flow]") {
  FlowNetwork net(2);
  net.add_arc(0, 1, 5.0);
  MaxFlowResult r = max_flow(net, 0, 1);
  CHECK(r.value == 5.0);
  CHECK(r.cut_side[0] == 1);
  CHECK(r.cut_side[1] == 0);
}

TEST_CASE("max flow on the diamond network", "[flow]") {
  // s=0, a=1, b=2, t=3; unit caps on s->a, s->b, a->t, b->t and a->b
  FlowNetwork net(4);
  net.add_arc(0, 1, 1.0);
  net.add_arc(0, 2, 1.0);
  net.add_arc(1, 3, 1.0);
  net.add_arc(2, 3, 1.0);
  net.add_arc(1, 2, 1.0);
  MaxFlowResult r = max_flow(net, 0, 3);
  CHECK(r.value == 2.0);
}

TEST_CASE("max flow conservation after a run", "[flow]") {
  FlowNetwork net(5);
  net.add_arc(0, 1, 3.0);
  net.add_arc(0, 2, 2.0);
  net.add_arc(1, 3, 2.0);
  net.add_arc(2, 3, 3.0);
  net.add_arc(1, 2, 1.0);
  net.add_arc(3, 4, 4.0);
  MaxFlowResult r = max_flow(net, 0, 4);
  CHECK(r.value == 4.0);
  for (int32_t v = 1; v <= 3; ++v) {
    double net_in = 0.0;
    for (int32_t a : net.arcs_of(v)) {
      // odd slot = reverse arc of the pair; flow(a) on the forward slot
      if (a % 2 == 0)
        net_in -= net.flow(a);
      else
        net_in += net.flow(a ^ 1);
    }
    CHECK(std::fabs(net_in) < 1e-12);
  }
}

TEST_CASE("max flow matches the augmenting-path oracle", "[flow]") {
  std::mt19937_64 rng(1618);
  MaxFlowOptions combos[] = {{true, true}, {true, false}, {false, true}, {false, false}};
  for (int32_t trial = 0; trial < 100; ++trial) {
    int32_t n = 2 + int32_t(rng() % 11);
    FlowNetwork net(n);
    int32_t arcs = n + int32_t(rng() % uint64_t(2 * n));
    for (int32_t i = 0; i < arcs; ++i) {
      int32_t u = int32_t(rng() % uint64_t(n));
      int32_t v = int32_t(rng() % uint64_t(n));
      if (u == v) continue;
      net.add_arc(u, v, double(rng() % 21));
    }
    int32_t s = 0, t = n - 1;
    double expect = oracle::ff_max_flow(net, s, t);
    const MaxFlowOptions& opt = combos[trial % 4];
    net.reset();
    MaxFlowResult r = max_flow(net, s, t, opt);
    CHECK(r.value == expect);
    CHECK(r.cut_side[size_t(s)] == 1);
    CHECK(r.cut_side[size_t(t)] == 0);
    CHECK(cut_capacity(net, r.cut_side) == expect);
  }
}

TEST_CASE("densest subgraph basics", "[mds]") {
  SECTION("triangle") {
    std::vector<std::pair<int32_t, int32_t>> edges{{0, 1}, {1, 2}, {0, 2}};
    DenseSubgraphResult r = max_density_subgraph(3, edges);
    CHECK(r.members == std::vector<int32_t>{0, 1, 2});
    CHECK(r.density == 1.0);
    CHECK(r.internal_edges == 3);
  }
  SECTION("K4 plus pendant") {
    std::vector<std::pair<int32_t, int32_t>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2},
                                                   {1, 3}, {2, 3}, {0, 4}};
    DenseSubgraphResult r = max_density_subgraph(5, edges);
    CHECK(r.members == std::vector<int32_t>{0, 1, 2, 3});
    CHECK(r.density == 1.5);
  }
  SECTION("degenerate views") {
    CHECK_THROWS_AS(max_density_subgraph(0, {}), GraphError);
    CHECK_THROWS_AS(max_density_subgraph(-2, {}), GraphError);
    DenseSubgraphResult lone = max_density_subgraph(4, {});
    CHECK(lone.members == std::vector<int32_t>{0});
    CHECK(lone.density == 0.0);
  }
}

TEST_CASE("densest subgraph matches exhaustive search", "[mds]") {
  std::mt19937_64 rng(27182);
  for (int32_t trial = 0; trial < 100; ++trial) {
    int32_t n = 2 + int32_t(rng() % 11);
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int32_t u = 0; u < n; ++u)
      for (int32_t v = u + 1; v < n; ++v)
        if (coin(rng) < 0.4) edges.push_back({u, v});
    DenseSubgraphResult r = max_density_subgraph(n, edges);
    double expect = oracle::densest_density(n, edges);
    CHECK(std::fabs(r.density - expect) <= 1.0 / (double(n) * double(n - 1)));
    // the reported set must itself realize the reported density
    int64_t inside = 0;
    std::vector<uint8_t> in_set(size_t(n), 0);
    for (int32_t v : r.members) in_set[size_t(v)] = 1;
    for (const auto& [u, v] : edges)
      if (in_set[size_t(u)] && in_set[size_t(v)]) ++inside;
    REQUIRE(!r.members.empty());
    CHECK(r.density == double(inside) / double(r.members.size()));
  }
}

TEST_CASE("kortsarz-peleg finds the star on complete graphs", "[kp]") {
  for (int32_t n : {5, 8, 12, 20}) {
    Graph g = complete_graph(n);
    Spanner h = kortsarz_peleg(g);
    CHECK(h.size() == n - 1);
    CHECK(validate_spanner(g, h).valid);
  }
}

TEST_CASE("kortsarz-peleg keeps all edges of triangle-free graphs", "[kp]") {
  SECTION("C6") {
    Graph g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0},
                {3, 4, 1.0}, {4, 5, 1.0}, {5, 0, 1.0}}, false);
    Spanner h = kortsarz_peleg(g);
    CHECK(h.size() == 6);
  }
  SECTION("Petersen graph is its own sparsest 2-spanner") {
    Graph g = petersen();
    Spanner h = kortsarz_peleg(g);
    CHECK(h.size() == 15);
    CHECK(validate_spanner(g, h).valid);
    CHECK(oracle::sparsest_spanner_size(g, 2.0) == 15);
  }
}

TEST_CASE("kortsarz-peleg rejects weighted input", "[kp]") {
  Graph g(3, {{0, 1, 2.0}, {1, 2, 2.0}}, true);
  CHECK_THROWS_AS(kortsarz_peleg(g), IncompatibleConfig);
}

TEST_CASE("kortsarz-peleg covered edges have their triangle in the spanner",
          "[kp]") {
  std::mt19937_64 rng(997);
  for (int32_t trial = 0; trial < 20; ++trial) {
    int32_t n = 5 + int32_t(rng() % 16);
    Graph g = random_graph(n, 0.5, rng);
    Spanner h = kortsarz_peleg(g);
    CHECK(validate_spanner(g, h).valid);
    for (int32_t e = 0; e < g.m(); ++e) {
      if (h.contains(e)) continue;
      // a covered edge {a,b} needs some w with {a,w} and {b,w} kept
      const Edge& ed = g.edge(e);
      bool witness = false;
      for (const HalfEdge& ha : g.neighbors(ed.u)) {
        if (!h.contains(ha.edge)) continue;
        for (const HalfEdge& hb : g.neighbors(ed.v))
          if (hb.to == ha.to && h.contains(hb.edge)) {
            witness = true;
            break;
          }
        if (witness) break;
      }
      CHECK(witness);
    }
  }
}

TEST_CASE("kortsarz-peleg is at least as large as the sparsest 2-spanner",
          "[kp]") {
  std::mt19937_64 rng(33550336);
  for (int32_t trial = 0; trial < 8; ++trial) {
    int32_t n = 4 + int32_t(rng() % 4);
    Graph g = random_graph(n, 0.45, rng);
    Spanner h = kortsarz_peleg(g);
    CHECK(h.size() >= oracle::sparsest_spanner_size(g, 2.0));
  }
}
