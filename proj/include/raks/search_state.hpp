#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/text_index.hpp"
#include "raks/types.hpp"
#include "raks/weighting.hpp"

namespace raks {

// Shared exploration state of one phase.
//
// h is node-major: h[v * keyword_count + j] is the distance from keyword j to v,
// `unreached` until set. frontier is F, joined is CF. join_level[v] is the
// level at which v was identified (the maximum of its row); a joined node only
// ever expanded at levels below that, so it produced values <= join_level[v].
struct SearchState {
  std::size_t node_count = 0;
  std::size_t keyword_count = 0;
  std::vector<Distance> h;
  std::vector<std::uint8_t> frontier;
  std::vector<std::uint8_t> joined;
  std::vector<Distance> join_level;
  Distance level = 0;

  SearchState() = default;
  SearchState(std::size_t nodes, std::size_t keywords);

  Distance at(NodeId v, std::size_t j) const { return h[v * keyword_count + j]; }
  std::span<const Distance> row(NodeId v) const {
    return {h.data() + v * keyword_count, keyword_count};
  }

  // Whether v may have produced (or may produce) a value `t` by expansion.
  bool can_expand(NodeId v, Distance t) const { return !joined[v] || t <= join_level[v]; }
};

// h = 0 and F = 1 on every keyword node; nothing joined yet. Identification of
// nodes containing all keywords happens on the first loop iteration.
SearchState init_state(std::size_t node_count, std::span<const KeywordMatch> keywords);

// Node ids with F = 1 in ascending order; clears F.
std::vector<NodeId> enqueue_frontiers(SearchState& state);

// Every not-yet-joined candidate whose row is complete gets CF = 1 and its
// join level. Returns those nodes in ascending order.
std::vector<NodeId> identify(SearchState& state, std::span<const NodeId> candidates);

// One level of the expansion procedure over `frontiers` at state.level.
void expand_level_serial(const KnowledgeGraph& graph, const ActivationLevels& activations,
                         SearchState& state, std::span<const NodeId> frontiers);
void expand_level_openmp(const KnowledgeGraph& graph, const ActivationLevels& activations,
                         SearchState& state, std::span<const NodeId> frontiers, int threads);

enum class Kernel { serial, openmp };

enum class StopReason { satisfied, exhausted, max_level, deadline };

const char* to_string(StopReason reason);

struct ExploreOptions {
  Distance max_level = 20;
  int threads = 1;
  Kernel kernel = Kernel::openmp;
  // When false nothing is ever joined and every node keeps expanding.
  bool blocking = true;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

// Called after every identification with the nodes joined on this iteration.
// Returning true stops the exploration.
using LevelCallback = std::function<bool(const SearchState&, std::span<const NodeId>)>;

// Level-synchronous loop: enqueue, identify, callback, then expand and advance
// unless frontiers ran out, max_level was reached or the deadline passed.
StopReason explore(const KnowledgeGraph& graph, const ActivationLevels& activations,
                   SearchState& state, const ExploreOptions& options,
                   const LevelCallback& on_level);

}  // namespace raks
