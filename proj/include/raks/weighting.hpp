#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/types.hpp"

namespace raks {

// Rescaled fine-grained weight per forward edge, in [0, 1].
struct FineWeights {
  std::vector<double> values;

  friend bool operator==(const FineWeights&, const FineWeights&) = default;
};

// Coarsened integer weight per forward edge.
struct ActivationLevels {
  std::vector<Activation> values;

  friend bool operator==(const ActivationLevels&, const ActivationLevels&) = default;
};

struct CoarseningParams {
  double alpha = 0.5;     // in (0, 1)
  double avg_hops = 1.0;  // sampled mean hop distance, > 0

  void validate() const;

  friend bool operator==(const CoarseningParams&, const CoarseningParams&) = default;
};

// Edges are grouped into label classes by (label, inverse flag). For edge u->v
// the raw weight is ln(c_out + c_in), where c_out counts out-edges of u in the
// class and c_in counts in-edges of v in the class (both include the edge).
std::vector<double> raw_fine_weights(const KnowledgeGraph& graph);

// Min-max rescale of raw_fine_weights; all zeros when every raw weight is equal.
FineWeights compute_fine_weights(const KnowledgeGraph& graph);

struct HopEstimate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  std::size_t samples = 0;
  std::size_t attempts = 0;
};

// Mean unweighted hop distance over uniformly sampled ordered node pairs,
// ignoring edge direction. Identical or disconnected pairs are redrawn; at most
// 10 * sample_pairs draws are made. Throws if no connected pair was drawn.
HopEstimate estimate_avg_hops(const KnowledgeGraph& graph, std::size_t sample_pairs,
                              std::uint64_t seed, int threads = 1);

// Exact mean over all ordered pairs of distinct connected nodes.
HopEstimate exact_avg_hops(const KnowledgeGraph& graph);

// Half-up rounding: floor(x + 0.5).
std::int64_t round_half_up(double x);

Activation coarsen_weight(double w, const CoarseningParams& params);
ActivationLevels coarsen(const FineWeights& weights, const CoarseningParams& params,
                         int threads = 1);

// Largest activation level coarsen can produce: Rounding(2 * avg_hops).
Activation max_activation(const CoarseningParams& params);

struct HalfOpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x < hi; }
};

// Range of fine weights that coarsen to `level`. Throws when level is outside
// [0, Rounding(2 * avg_hops)].
HalfOpenInterval bound_fine_weight(Activation level, const CoarseningParams& params);

// Upper bound on the summed fine weights of a path of `length` nodes whose
// coarse score is `score`, taking the activation sequence
// score-(length-1), ..., score-1 and the upper end of each level's interval.
// Levels above the coarsening range are clamped to its maximum.
double upper_bound_path_score(std::uint32_t length, Distance score,
                              const CoarseningParams& params);

}  // namespace raks
