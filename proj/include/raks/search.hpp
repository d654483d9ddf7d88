#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/ranking.hpp"
#include "raks/recovery.hpp"
#include "raks/search_state.hpp"
#include "raks/text_index.hpp"
#include "raks/weighting.hpp"

namespace raks {

// conservative: stop the marginal phase once the k-th result is strictly
// better than any score an unresolved central graph can still reach, using
// level + 1 as the lower bound of its missing marginal distance.
// eager: stop when the k-th result is no worse than the best unresolved central
// score combined with the k-th result's own marginal score.
enum class Termination { conservative, eager };

struct SearchParams {
  ScoreParams score;
  std::size_t topk = 20;
  std::size_t beam = 0;  // 0: same as topk
  Distance max_level = 20;
  int threads = 1;
  Kernel kernel = Kernel::openmp;
  Termination termination = Termination::conservative;
  double time_limit_s = 500.0;

  std::size_t beam_width() const { return beam == 0 ? topk : beam; }
  void validate() const;
};

struct Query {
  std::vector<KeywordMatch> central;
  std::vector<KeywordMatch> marginal;
};

// Looks every keyword up; all failures are reported together in one QueryError.
Query resolve_query(const NodeTextIndex& text, const std::vector<std::string>& central,
                    const std::vector<std::string>& marginal);

// Read-only inputs of a search. Activations and weights are indexed by EdgeId.
struct SearchInput {
  const KnowledgeGraph& graph;
  const ActivationLevels& activations;
  const FineWeights& weights;
};

struct SearchResult {
  std::size_t rank = 0;
  double combined_score = 0.0;  // ranking score: central score alone for keyword-only queries
  Distance central_score = 0;
  std::optional<Distance> marginal_score;
  double tie_break = 0.0;
  NodeId central_node = 0;
  std::vector<NodeId> nodes;  // sorted
  std::vector<EdgeId> edges;  // sorted
  std::vector<NodeId> central_keyword_nodes;
  std::vector<Distance> keyword_distances;
  std::vector<Distance> marginal_distances;
  std::vector<EdgeId> marginal_edges;
  bool ptc = true;
};

SearchResult make_result(const SearchInput& input, const CentralGraph& cg);
SearchResult make_result(const SearchInput& input, const RadialPatternGraph& rpg, bool ptc,
                         const ScoreParams& params);

// Ranks, drops structural duplicates (first in rank order wins), keeps at most
// `limit` and numbers ranks from 1.
std::vector<SearchResult> rank_unique(const KnowledgeGraph& graph,
                                      std::vector<SearchResult> results, std::size_t limit);

struct CentralPhase {
  SearchState state;
  std::vector<CentralGraph> graphs;  // identification order
  StopReason stop = StopReason::exhausted;
};

// Explores from the central keywords, recovering every central graph as it is
// identified. Stops at the first level after which `beam` structurally
// distinct graphs exist; beam = 0 explores until exhaustion or max_level.
CentralPhase run_central_phase(const SearchInput& input, std::span<const KeywordMatch> central,
                               const SearchParams& params, std::size_t beam,
                               std::chrono::steady_clock::time_point deadline =
                                   std::chrono::steady_clock::time_point::max());

// Best `w` structurally distinct central graphs in rank order.
std::vector<CentralGraph> select_central_graphs(const SearchInput& input,
                                                const std::vector<CentralGraph>& graphs,
                                                std::size_t w);

struct MarginalPhase {
  SearchState state;
  std::vector<RadialPatternGraph> accepted;  // resolved and passing PTC, resolution order
  std::size_t ptc_rejected = 0;
  std::size_t unresolved = 0;
  StopReason stop = StopReason::exhausted;
};

// Nodes reached by every marginal keyword stop expanding when there are at
// least two marginal keywords. A central graph is resolved on the level its
// last marginal distance becomes finite.
MarginalPhase run_marginal_phase(const SearchInput& input, std::span<const CentralGraph> cgs,
                                 std::span<const KeywordMatch> marginal,
                                 const SearchParams& params,
                                 std::chrono::steady_clock::time_point deadline =
                                     std::chrono::steady_clock::time_point::max());

struct SearchStats {
  Distance central_levels = 0;
  Distance marginal_levels = 0;
  double central_seconds = 0.0;
  double marginal_seconds = 0.0;
  std::size_t central_graphs_identified = 0;
  std::size_t central_graphs_kept = 0;
  std::size_t rpgs_resolved = 0;
  std::size_t ptc_rejected = 0;
  StopReason central_stop = StopReason::exhausted;
  std::optional<StopReason> marginal_stop;
};

struct SearchOutput {
  std::vector<SearchResult> results;
  SearchStats stats;
  std::vector<std::string> diagnostics;
};

SearchOutput search(const SearchInput& input, const Query& query, const SearchParams& params);

}  // namespace raks
