#pragma once

#include <compare>
#include <span>
#include <tuple>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/search_state.hpp"
#include "raks/text_index.hpp"
#include "raks/weighting.hpp"

namespace raks {

struct RecoveredPaths {
  std::vector<NodeId> nodes;  // sorted
  std::vector<EdgeId> edges;  // sorted forward edge ids
};

// Backward walk over in-edges from `roots` for keyword column `keyword`.
// Edge n->q is kept when h[q] = max(a_nq, h[n]) + 1 and n was allowed to
// expand to that value; n is walked further unless it is a keyword node.
// Throws InvariantViolation when a reached non-keyword node has no such edge.
RecoveredPaths recover_paths(const KnowledgeGraph& graph, const ActivationLevels& activations,
                             const SearchState& state, std::size_t keyword,
                             std::span<const NodeId> roots);

struct CentralGraph {
  NodeId central_node = 0;
  std::vector<NodeId> nodes;                  // sorted
  std::vector<EdgeId> edges;                  // sorted
  std::vector<NodeId> central_keyword_nodes;  // nodes holding a central keyword, sorted
  std::vector<Distance> keyword_distances;    // the central node's row
  Distance score = 0;
  Distance identified_level = 0;  // loop iteration that identified the central node
};

CentralGraph recover_cg(const KnowledgeGraph& graph, const ActivationLevels& activations,
                        const SearchState& central_state, NodeId central_node);

struct RadialPatternGraph {
  CentralGraph base;
  std::vector<NodeId> marginal_nodes;  // sorted
  std::vector<EdgeId> marginal_edges;  // sorted
  std::vector<Distance> marginal_distances;
  Distance marginal_score = 0;

  std::vector<NodeId> all_nodes() const;
  std::vector<EdgeId> all_edges() const;
};

// Per marginal keyword, the minimum of its column over `targets`.
std::vector<Distance> distances_to_set(const SearchState& marginal_state,
                                       std::span<const NodeId> targets);

// Marginal paths of every keyword, started from exactly those central keyword
// nodes that attain the keyword's minimum distance. All distances must be finite.
RadialPatternGraph recover_rpg(const KnowledgeGraph& graph, const ActivationLevels& activations,
                               const SearchState& marginal_state, const CentralGraph& cg);

// Single marginal keyword: a node holding it is connected to the central
// keyword nodes. Otherwise: after deleting the central keyword nodes from the
// undirected result (each deleted node standing alone), the marginal keyword
// nodes of the result fall into at least two components.
bool check_ptc(const KnowledgeGraph& graph, std::span<const NodeId> nodes,
               std::span<const EdgeId> edges, std::span<const NodeId> central_keyword_nodes,
               std::span<const KeywordMatch> marginal);
bool check_ptc(const KnowledgeGraph& graph, const RadialPatternGraph& rpg,
               std::span<const KeywordMatch> marginal);

// Result identity for duplicate removal: node set plus undirected labeled edges.
struct StructureKey {
  std::vector<NodeId> nodes;
  std::vector<std::tuple<NodeId, NodeId, LabelId>> edges;

  friend auto operator<=>(const StructureKey&, const StructureKey&) = default;
  friend bool operator==(const StructureKey&, const StructureKey&) = default;
};

StructureKey structure_key(const KnowledgeGraph& graph, std::span<const NodeId> nodes,
                           std::span<const EdgeId> edges);

}  // namespace raks
