#include "raks/search_state.hpp"

#include <algorithm>

#include "raks/error.hpp"

namespace raks {

SearchState::SearchState(std::size_t nodes, std::size_t keywords)
    : node_count(nodes),
      keyword_count(keywords),
      h(nodes * keywords, unreached),
      frontier(nodes, 0),
      joined(nodes, 0),
      join_level(nodes, unreached) {}

SearchState init_state(std::size_t node_count, std::span<const KeywordMatch> keywords) {
  if (keywords.empty()) throw Error("exploration needs at least one keyword");
  SearchState state(node_count, keywords.size());
  for (std::size_t j = 0; j < keywords.size(); ++j) {
    if (keywords[j].nodes.empty()) throw KeywordUnresolved(keywords[j].keyword);
    for (NodeId v : keywords[j].nodes) {
      if (v >= node_count) throw Error("keyword node out of range");
      state.h[v * state.keyword_count + j] = 0;
      state.frontier[v] = 1;
    }
  }
  return state;
}

std::vector<NodeId> enqueue_frontiers(SearchState& state) {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < state.node_count; ++v) {
    if (state.frontier[v]) {
      out.push_back(static_cast<NodeId>(v));
      state.frontier[v] = 0;
    }
  }
  return out;
}

std::vector<NodeId> identify(SearchState& state, std::span<const NodeId> candidates) {
  std::vector<NodeId> out;
  for (NodeId v : candidates) {
    if (state.joined[v]) continue;
    const auto row = state.row(v);
    if (std::find(row.begin(), row.end(), unreached) != row.end()) continue;
    state.joined[v] = 1;
    state.join_level[v] = *std::max_element(row.begin(), row.end());
    out.push_back(v);
  }
  return out;
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::satisfied: return "satisfied";
    case StopReason::exhausted: return "exhausted";
    case StopReason::max_level: return "max_level";
    case StopReason::deadline: return "deadline";
  }
  return "unknown";
}

StopReason explore(const KnowledgeGraph& graph, const ActivationLevels& activations,
                   SearchState& state, const ExploreOptions& options,
                   const LevelCallback& on_level) {
  if (activations.values.size() != graph.edge_count()) {
    throw Error("activation count does not match edge count");
  }
  while (true) {
    const std::vector<NodeId> frontiers = enqueue_frontiers(state);
    std::vector<NodeId> joined;
    if (options.blocking) joined = identify(state, frontiers);
    if (on_level && on_level(state, joined)) return StopReason::satisfied;
    if (frontiers.empty()) return StopReason::exhausted;
    if (state.level >= options.max_level) return StopReason::max_level;
    if (std::chrono::steady_clock::now() >= options.deadline) return StopReason::deadline;
    if (options.kernel == Kernel::serial) {
      expand_level_serial(graph, activations, state, frontiers);
    } else {
      expand_level_openmp(graph, activations, state, frontiers, options.threads);
    }
    ++state.level;
  }
}

}  // namespace raks
