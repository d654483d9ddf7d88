#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/rng.hpp"
#include "raks/search.hpp"
#include "raks/text_index.hpp"
#include "raks/weighting.hpp"

namespace raks::testing {

struct TestGraph {
  KnowledgeGraph graph;
  ActivationLevels activations;
  FineWeights weights;
  NodeTextIndex text;

  SearchInput input() const { return {graph, activations, weights}; }
};

struct WeightedTriple {
  std::string src, label, dst;
  Activation activation;
};

// Both directions of each triple get its activation; node text is the node name.
inline TestGraph make_graph(const std::vector<WeightedTriple>& triples) {
  std::vector<Triple> plain;
  for (const auto& t : triples) plain.push_back({t.src, t.label, t.dst});
  TestGraph tg;
  tg.graph = ingest_edges(plain);
  tg.weights = compute_fine_weights(tg.graph);
  tg.activations.values.resize(tg.graph.edge_count());
  for (EdgeId e = 0; e < tg.graph.edge_count(); ++e) {
    const NodeId u = tg.graph.source(e), v = tg.graph.edge(e).target;
    const std::string& label = tg.graph.label_name(tg.graph.edge(e).label);
    const bool inverse = tg.graph.edge(e).inverse;
    const std::string& a = tg.graph.node_name(inverse ? v : u);
    const std::string& b = tg.graph.node_name(inverse ? u : v);
    for (const auto& t : triples) {
      if (t.src == a && t.dst == b && t.label == label) {
        tg.activations.values[e] = t.activation;
        break;
      }
    }
  }
  std::vector<std::pair<NodeId, std::string>> texts;
  for (NodeId v = 0; v < tg.graph.node_count(); ++v) texts.emplace_back(v, tg.graph.node_name(v));
  tg.text = build_text_index(tg.graph.node_count(), texts);
  return tg;
}

inline KeywordMatch match_of(const TestGraph& tg, const std::string& keyword,
                             const std::vector<std::string>& names) {
  KeywordMatch m{keyword, {}};
  for (const auto& n : names) m.nodes.push_back(*tg.graph.find_node(n));
  std::sort(m.nodes.begin(), m.nodes.end());
  return m;
}

// Random multigraph on nodes v0..v{n-1}: usually a random spanning tree plus
// random extra triples, sometimes only random triples (so it may be
// disconnected). Fine weights are uniform per directed edge and activations
// are their coarsening under random (alpha, avg_hops), so a <= Rounding(2 Ā).
inline TestGraph random_graph(Rng& rng, std::size_t nodes, std::size_t triples,
                              std::size_t labels = 3) {
  std::vector<Triple> plain;
  auto name = [](std::size_t v) { return "v" + std::to_string(v); };
  const bool tree = uniform_below(rng, 10) < 7;
  if (tree) {
    for (std::size_t i = 1; i < nodes && plain.size() < triples; ++i) {
      plain.push_back({name(i), "L" + std::to_string(uniform_below(rng, labels)),
                       name(uniform_below(rng, i))});
    }
  }
  while (plain.size() < triples) {
    const auto a = uniform_below(rng, nodes), b = uniform_below(rng, nodes);
    if (a == b) continue;
    plain.push_back({name(a), "L" + std::to_string(uniform_below(rng, labels)), name(b)});
  }
  TestGraph tg;
  tg.graph = ingest_edges(plain);
  CoarseningParams params;
  const double alphas[3] = {0.2, 0.5, 0.8};
  params.alpha = alphas[uniform_below(rng, 3)];
  params.avg_hops = 2.0 + 4.0 * uniform_unit(rng);
  tg.weights.values.resize(tg.graph.edge_count());
  for (double& w : tg.weights.values) w = uniform_unit(rng);
  tg.activations = coarsen(tg.weights, params);
  std::vector<std::pair<NodeId, std::string>> texts;
  for (NodeId v = 0; v < tg.graph.node_count(); ++v) texts.emplace_back(v, tg.graph.node_name(v));
  tg.text = build_text_index(tg.graph.node_count(), texts);
  return tg;
}

// Keyword on 1..max_nodes distinct random nodes.
inline KeywordMatch random_keyword(Rng& rng, std::size_t node_count, const std::string& name,
                                   std::size_t max_nodes = 3) {
  KeywordMatch m{name, {}};
  const std::size_t count = 1 + uniform_below(rng, max_nodes);
  while (m.nodes.size() < std::min(count, node_count)) {
    const auto v = static_cast<NodeId>(uniform_below(rng, node_count));
    if (std::find(m.nodes.begin(), m.nodes.end(), v) == m.nodes.end()) m.nodes.push_back(v);
  }
  std::sort(m.nodes.begin(), m.nodes.end());
  return m;
}

inline std::vector<KeywordMatch> random_keywords(Rng& rng, std::size_t node_count,
                                                 std::size_t count, const std::string& prefix) {
  std::vector<KeywordMatch> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_keyword(rng, node_count, prefix + std::to_string(i)));
  }
  return out;
}

// The small example: k1-(1)-v-(1)-k2, m-(1)-k1, and a distractor z-(5)-v.
inline TestGraph five_node_example() {
  return make_graph({{"k1", "r", "v", 1}, {"k2", "r", "v", 1}, {"m", "r", "k1", 1},
                     {"z", "r", "v", 5}});
}

// Two equal paths k1->x->c and k1->y->c with a = 0, and k2-(1)-c.
inline TestGraph diamond_example() {
  return make_graph({{"k1", "r", "x", 0}, {"x", "r", "c", 0}, {"k1", "r", "y", 0},
                     {"y", "r", "c", 0}, {"k2", "r", "c", 1}});
}

}  // namespace raks::testing
