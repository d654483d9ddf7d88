#include <atomic>

#include "raks/parallel.hpp"
#include "raks/search_state.hpp"

namespace raks {

// Same procedure as expand_level_serial with frontiers spread over threads.
// Every concurrent write to h stores l + 1 into a cell that was unreached, and
// every write to F stores 1, so racing writers agree on the value. The cells
// are accessed through relaxed atomics to make that explicit; the implicit
// barrier at the end of the region orders them before the next identification.
void expand_level_openmp(const KnowledgeGraph& graph, const ActivationLevels& activations,
                         SearchState& state, std::span<const NodeId> frontiers, int threads) {
  const Distance l = state.level;
  const std::size_t K = state.keyword_count;
  const std::size_t count = frontiers.size();
  Distance* h = state.h.data();
  std::uint8_t* flags = state.frontier.data();
  const std::uint8_t* joined = state.joined.data();
  const Activation* act = activations.values.data();

  parallel::region(threads, [&] {
#pragma omp for schedule(dynamic, 64) nowait
    for (std::size_t idx = 0; idx < count; ++idx) {
      const NodeId f = frontiers[idx];
      if (joined[f]) continue;
      const EdgeId begin = graph.first_edge(f), end = graph.end_edge(f);
      for (std::size_t i = 0; i < K; ++i) {
        if (std::atomic_ref<Distance>(h[f * K + i]).load(std::memory_order_relaxed) > l) continue;
        for (EdgeId e = begin; e < end; ++e) {
          if (act[e] > l) {
            std::atomic_ref<std::uint8_t>(flags[f]).store(1, std::memory_order_relaxed);
            continue;
          }
          const NodeId n = graph.edge(e).target;
          std::atomic_ref<Distance> cell(h[n * K + i]);
          if (cell.load(std::memory_order_relaxed) == unreached) {
            cell.store(l + 1, std::memory_order_relaxed);
            std::atomic_ref<std::uint8_t>(flags[n]).store(1, std::memory_order_relaxed);
          }
        }
      }
    }
  });
}

}  // namespace raks
