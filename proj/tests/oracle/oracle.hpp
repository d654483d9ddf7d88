#pragma once

// Slow, literal reference implementations for the test suites.

#include <span>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/search.hpp"
#include "raks/text_index.hpp"
#include "raks/weighting.hpp"

namespace raks::oracle {

struct OracleConfig {
  std::size_t max_enumeration_edges = 8;  // at most 12
  bool mirror_blocking = true;
};

// Best-first search with s' = max(s, a) + 1, minimized over `sources`.
std::vector<Distance> oracle_distances(const KnowledgeGraph& graph,
                                       const ActivationLevels& activations,
                                       std::span<const NodeId> sources);
Distance oracle_distance(const KnowledgeGraph& graph, const ActivationLevels& activations,
                         std::span<const NodeId> sources, NodeId target);

// Distances of several keywords explored together, where a node reached by
// every keyword (the row is complete after settling value J) stops producing
// values above J. Values above max_level are never settled.
struct BlockedDistances {
  std::size_t keyword_count = 0;
  std::vector<Distance> d;
  std::vector<std::uint8_t> joined;
  std::vector<Distance> join_level;

  Distance at(NodeId v, std::size_t j) const { return d[v * keyword_count + j]; }
  bool allowed(NodeId v, Distance t) const { return !joined[v] || t <= join_level[v]; }
};

BlockedDistances blocked_distances(const KnowledgeGraph& graph,
                                   const ActivationLevels& activations,
                                   std::span<const KeywordMatch> keywords, Distance max_level,
                                   bool blocking);

// Union of edges over every minimum-score path from keyword `keyword` to any
// of `targets` (each target taken at its own distance) whose every prefix is
// itself minimal. Sorted.
std::vector<EdgeId> oracle_shortest_path_edges(const KnowledgeGraph& graph,
                                               const ActivationLevels& activations,
                                               const BlockedDistances& dist,
                                               std::size_t keyword,
                                               std::span<const NodeId> targets);

// Unblocked single-keyword form.
std::vector<EdgeId> oracle_shortest_path_edges(const KnowledgeGraph& graph,
                                               const ActivationLevels& activations,
                                               std::span<const NodeId> sources, NodeId target);

// Exhaustive simple-path enumeration from `sources`, up to max_edges edges.
struct Enumeration {
  std::vector<Distance> best;  // per node, unreached when no path was found
  // Edges of minimum-score paths to `target` whose prefixes are all minimal.
  std::vector<EdgeId> target_edges;
};
Enumeration enumerate_paths(const KnowledgeGraph& graph, const ActivationLevels& activations,
                            std::span<const NodeId> sources, NodeId target,
                            const OracleConfig& config);

// Pairwise cut test: some two marginal keyword nodes are separated once the
// central keyword nodes are deleted. One marginal keyword: connected to them.
bool oracle_ptc(const KnowledgeGraph& graph, std::span<const NodeId> nodes,
                std::span<const EdgeId> edges, std::span<const NodeId> central_keyword_nodes,
                std::span<const KeywordMatch> marginal);

// Central graphs built for every node, cut at the first score at which w
// distinct ones exist, top w kept, then marginal attachments, PTC, ranking.
std::vector<SearchResult> oracle_search(const SearchInput& input, const Query& query,
                                        const SearchParams& params,
                                        const OracleConfig& config = {});

}  // namespace raks::oracle
