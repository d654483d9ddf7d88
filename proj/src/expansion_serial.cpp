#include "raks/search_state.hpp"

namespace raks {

// Reference kernel: plain loads and stores, frontiers in order.
void expand_level_serial(const KnowledgeGraph& graph, const ActivationLevels& activations,
                         SearchState& state, std::span<const NodeId> frontiers) {
  const Distance l = state.level;
  const std::size_t K = state.keyword_count;
  for (NodeId f : frontiers) {
    if (state.joined[f]) continue;
    const EdgeId begin = graph.first_edge(f), end = graph.end_edge(f);
    for (std::size_t i = 0; i < K; ++i) {
      if (state.h[f * K + i] > l) continue;
      for (EdgeId e = begin; e < end; ++e) {
        if (activations.values[e] > l) {
          state.frontier[f] = 1;
          continue;
        }
        const NodeId n = graph.edge(e).target;
        Distance& cell = state.h[n * K + i];
        if (cell == unreached) {
          cell = l + 1;
          state.frontier[n] = 1;
        }
      }
    }
  }
}

}  // namespace raks
