#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "raks/recovery.hpp"

using namespace raks;
using namespace raks::oracle;

TEST_SUITE("oracle") {

TEST_CASE("distance examples") {
  const auto tg = testing::make_graph({{"a", "r", "b", 3}});
  const NodeId a = *tg.graph.find_node("a"), b = *tg.graph.find_node("b");
  const NodeId src[1] = {a};
  CHECK(oracle_distance(tg.graph, tg.activations, src, a) == 0);
  CHECK(oracle_distance(tg.graph, tg.activations, src, b) == 4);
  const auto split = testing::make_graph({{"a", "r", "b", 0}, {"c", "r", "d", 0}});
  const NodeId s2[1] = {*split.graph.find_node("a")};
  CHECK(oracle_distance(split.graph, split.activations, s2, *split.graph.find_node("d")) ==
        unreached);
  CHECK(oracle_shortest_path_edges(split.graph, split.activations, s2, *split.graph.find_node("d"))
            .empty());
}

TEST_CASE("shortest path edges: unique path and diamond") {
  const auto chain = testing::make_graph({{"a", "r", "b", 1}, {"b", "r", "c", 2}});
  const NodeId a[1] = {*chain.graph.find_node("a")};
  CHECK(oracle_shortest_path_edges(chain.graph, chain.activations, a, *chain.graph.find_node("c"))
            .size() == 2);

  const auto d = testing::diamond_example();
  const NodeId k1[1] = {*d.graph.find_node("k1")};
  CHECK(oracle_shortest_path_edges(d.graph, d.activations, k1, *d.graph.find_node("c")).size() ==
        4);
}

TEST_CASE("distances and path sets agree with exhaustive enumeration") {
  Rng rng(17);
  OracleConfig config;
  config.max_enumeration_edges = 8;
  for (int round = 0; round < 60; ++round) {
    // Up to 9 nodes so every simple path fits in the enumeration bound.
    const auto tg = testing::random_graph(rng, 2 + uniform_below(rng, 8), 1 + uniform_below(rng, 14));
    const std::size_t n = tg.graph.node_count();
    const auto kw = testing::random_keyword(rng, n, "k", 2);
    const auto dist = oracle_distances(tg.graph, tg.activations, kw.nodes);
    for (NodeId t = 0; t < n; ++t) {
      const auto en = enumerate_paths(tg.graph, tg.activations, kw.nodes, t, config);
      REQUIRE(en.best == dist);
      REQUIRE(oracle_shortest_path_edges(tg.graph, tg.activations, kw.nodes, t) ==
              en.target_edges);
    }
  }
}

TEST_CASE("30-node graphs: best-first distances match enumeration up to 8 edges") {
  Rng rng(23);
  OracleConfig config;
  config.max_enumeration_edges = 8;
  for (int round = 0; round < 5; ++round) {
    const auto tg = testing::random_graph(rng, 30, 36);
    const std::size_t n = tg.graph.node_count();
    const auto kw = testing::random_keyword(rng, n, "k", 1);
    const auto dist = oracle_distances(tg.graph, tg.activations, kw.nodes);
    const auto en = enumerate_paths(tg.graph, tg.activations, kw.nodes, 0, config);
    for (NodeId v = 0; v < n; ++v) {
      // Enumeration is capped, so it can only miss paths, never beat the search.
      REQUIRE(en.best[v] >= dist[v]);
    }
  }
}

TEST_CASE("blocked distances without blocking equal plain distances") {
  Rng rng(29);
  for (int round = 0; round < 20; ++round) {
    const auto tg = testing::random_graph(rng, 40, 80);
    const std::size_t n = tg.graph.node_count();
    const auto kws = testing::random_keywords(rng, n, 2, "k");
    const auto blocked = blocked_distances(tg.graph, tg.activations, kws, 1000, false);
    for (std::size_t j = 0; j < kws.size(); ++j) {
      const auto d = oracle_distances(tg.graph, tg.activations, kws[j].nodes);
      for (NodeId v = 0; v < n; ++v) REQUIRE(blocked.at(v, j) == d[v]);
    }
  }
}

TEST_CASE("pairwise cut and union-find PTC agree on random structures") {
  Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto tg = testing::random_graph(rng, 3 + uniform_below(rng, 10), 2 + uniform_below(rng, 15));
    const std::size_t n = tg.graph.node_count();
    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < tg.graph.edge_count(); ++e) {
      if (uniform_below(rng, 2)) edges.push_back(e);
    }
    std::vector<NodeId> vc = testing::random_keyword(rng, n, "c", 2).nodes;
    const auto marginal = testing::random_keywords(rng, n, 1 + uniform_below(rng, 3), "m");
    REQUIRE(check_ptc(tg.graph, nodes, edges, vc, marginal) ==
            oracle_ptc(tg.graph, nodes, edges, vc, marginal));
  }
}

TEST_CASE("oracle search on the five-node example") {
  const auto tg = testing::five_node_example();
  Query q;
  q.central = {testing::match_of(tg, "k1", {"k1"}), testing::match_of(tg, "k2", {"k2"})};
  q.marginal = {testing::match_of(tg, "m", {"m"})};
  SearchParams p;
  p.topk = 1;
  const auto results = oracle_search(tg.input(), q, p);
  REQUIRE(results.size() == 1);
  CHECK(results[0].combined_score == 2.0);
  CHECK(results[0].marginal_score == 2u);
  q.marginal.clear();
  CHECK(oracle_search(tg.input(), q, p).size() == 1);
}

}  // TEST_SUITE
