#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raks/types.hpp"
#include "raks/weighting.hpp"

namespace raks {

// Coarse path score: s <- max(s, a) + 1 folded over the activation sequence.
Distance path_score(std::span<const Activation> activations);

// Largest keyword distance of a central node's row.
Distance cg_score(std::span<const Distance> keyword_distances);

// Largest per-marginal-keyword distance to the central keyword nodes.
Distance marginal_score(std::span<const Distance> marginal_distances);

enum class Combination { additive, multiplicative };

struct ScoreParams {
  double gamma = 0.5;
  Combination combination = Combination::additive;

  void validate() const;
};

// additive: gamma*sc + (1-gamma)*sm.
// multiplicative: sc^gamma * sm^(1-gamma), with a zero component taken as 1.
double rpg_score(Distance central, Distance marginal, const ScoreParams& params);

// Sum of fine weights over `edges`, added in the given order. Callers pass a
// sorted edge list so the floating-point sum is reproducible.
double tie_break_sum(std::span<const EdgeId> edges, const FineWeights& weights);

struct RankKey {
  double primary = 0.0;
  double tie_break = 0.0;
  NodeId central_node = 0;
};

// (primary, tie_break, central_node) ascending.
bool rank_before(const RankKey& a, const RankKey& b);

// Permutation of [0, keys.size()) in rank order. Equal keys keep input order.
std::vector<std::size_t> rank_order(std::span<const RankKey> keys);

}  // namespace raks
