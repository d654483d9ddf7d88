#include "raks/recovery.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "raks/error.hpp"
#include "raks/ranking.hpp"

namespace raks {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
std::vector<T> merged(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool holds(std::span<const NodeId> sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

RecoveredPaths recover_paths(const KnowledgeGraph& graph, const ActivationLevels& activations,
                             const SearchState& state, std::size_t keyword,
                             std::span<const NodeId> roots) {
  RecoveredPaths out;
  std::unordered_set<NodeId> visited;
  std::vector<NodeId> queue;
  for (NodeId r : roots) {
    if (state.at(r, keyword) == unreached) throw Error("recovery root not reached by keyword");
    if (!visited.insert(r).second) continue;
    out.nodes.push_back(r);
    if (state.at(r, keyword) != 0) queue.push_back(r);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId q = queue[head];
    const Distance hq = state.at(q, keyword);
    bool found = false;
    for (const InEdge& in : graph.in_edges(q)) {
      const NodeId n = in.source;
      const Distance hn = state.at(n, keyword);
      if (hn == unreached) continue;
      if (std::max<Distance>(activations.values[in.edge], hn) + 1 != hq) continue;
      if (!state.can_expand(n, hq)) continue;
      found = true;
      out.edges.push_back(in.edge);
      if (visited.insert(n).second) {
        out.nodes.push_back(n);
        if (hn != 0) queue.push_back(n);
      }
    }
    if (!found) {
      throw InvariantViolation("node " + graph.node_name(q) + " at distance " +
                               std::to_string(hq) + " of keyword " + std::to_string(keyword) +
                               " has no recoverable predecessor");
    }
  }
  sort_unique(out.nodes);
  sort_unique(out.edges);
  return out;
}

CentralGraph recover_cg(const KnowledgeGraph& graph, const ActivationLevels& activations,
                        const SearchState& central_state, NodeId central_node) {
  CentralGraph cg;
  cg.central_node = central_node;
  const auto row = central_state.row(central_node);
  cg.keyword_distances.assign(row.begin(), row.end());
  cg.score = cg_score(cg.keyword_distances);

  const NodeId root[1] = {central_node};
  for (std::size_t j = 0; j < central_state.keyword_count; ++j) {
    RecoveredPaths paths = recover_paths(graph, activations, central_state, j, root);
    cg.nodes = merged(cg.nodes, paths.nodes);
    cg.edges = merged(cg.edges, paths.edges);
  }
  for (NodeId v : cg.nodes) {
    const auto r = central_state.row(v);
    if (std::find(r.begin(), r.end(), Distance{0}) != r.end()) {
      cg.central_keyword_nodes.push_back(v);
    }
  }
  return cg;
}

std::vector<NodeId> RadialPatternGraph::all_nodes() const {
  return merged(base.nodes, marginal_nodes);
}

std::vector<EdgeId> RadialPatternGraph::all_edges() const {
  return merged(base.edges, marginal_edges);
}

std::vector<Distance> distances_to_set(const SearchState& marginal_state,
                                       std::span<const NodeId> targets) {
  std::vector<Distance> out(marginal_state.keyword_count, unreached);
  for (NodeId v : targets) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = std::min(out[i], marginal_state.at(v, i));
    }
  }
  return out;
}

RadialPatternGraph recover_rpg(const KnowledgeGraph& graph, const ActivationLevels& activations,
                               const SearchState& marginal_state, const CentralGraph& cg) {
  RadialPatternGraph rpg;
  rpg.base = cg;
  rpg.marginal_distances = distances_to_set(marginal_state, cg.central_keyword_nodes);
  rpg.marginal_score = marginal_score(rpg.marginal_distances);
  for (std::size_t i = 0; i < marginal_state.keyword_count; ++i) {
    std::vector<NodeId> roots;
    for (NodeId v : cg.central_keyword_nodes) {
      if (marginal_state.at(v, i) == rpg.marginal_distances[i]) roots.push_back(v);
    }
    RecoveredPaths paths = recover_paths(graph, activations, marginal_state, i, roots);
    rpg.marginal_nodes = merged(rpg.marginal_nodes, paths.nodes);
    rpg.marginal_edges = merged(rpg.marginal_edges, paths.edges);
  }
  return rpg;
}

bool check_ptc(const KnowledgeGraph& graph, std::span<const NodeId> nodes,
               std::span<const EdgeId> edges, std::span<const NodeId> central_keyword_nodes,
               std::span<const KeywordMatch> marginal) {
  auto is_marginal = [&](NodeId v) {
    return std::any_of(marginal.begin(), marginal.end(),
                       [&](const KeywordMatch& m) { return holds(m.nodes, v); });
  };
  std::unordered_map<NodeId, std::size_t> slot;
  for (NodeId v : nodes) slot.emplace(v, slot.size());
  std::vector<std::size_t> parent(slot.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  if (marginal.size() == 1) {
    // Connectivity of the whole result; any marginal node sharing a component
    // with a central keyword node passes.
    for (EdgeId e : edges) {
      parent[find(slot.at(graph.source(e)))] = find(slot.at(graph.edge(e).target));
    }
    std::unordered_set<std::size_t> central_roots;
    for (NodeId v : central_keyword_nodes) {
      if (slot.count(v)) central_roots.insert(find(slot.at(v)));
    }
    for (NodeId v : nodes) {
      if (is_marginal(v) && central_roots.count(find(slot.at(v)))) return true;
    }
    return false;
  }

  for (EdgeId e : edges) {
    const NodeId u = graph.source(e), v = graph.edge(e).target;
    if (holds(central_keyword_nodes, u) || holds(central_keyword_nodes, v)) continue;
    parent[find(slot.at(u))] = find(slot.at(v));
  }
  std::unordered_set<std::size_t> components;
  for (NodeId v : nodes) {
    if (is_marginal(v)) components.insert(find(slot.at(v)));
  }
  return components.size() >= 2;
}

bool check_ptc(const KnowledgeGraph& graph, const RadialPatternGraph& rpg,
               std::span<const KeywordMatch> marginal) {
  return check_ptc(graph, rpg.all_nodes(), rpg.all_edges(), rpg.base.central_keyword_nodes,
                   marginal);
}

StructureKey structure_key(const KnowledgeGraph& graph, std::span<const NodeId> nodes,
                           std::span<const EdgeId> edges) {
  StructureKey key;
  key.nodes.assign(nodes.begin(), nodes.end());
  sort_unique(key.nodes);
  for (EdgeId e : edges) {
    const NodeId u = graph.source(e), v = graph.edge(e).target;
    key.edges.emplace_back(std::min(u, v), std::max(u, v), graph.edge(e).label);
  }
  sort_unique(key.edges);
  return key;
}

}  // namespace raks
