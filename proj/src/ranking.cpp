#include "raks/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "raks/error.hpp"

namespace raks {

Distance path_score(std::span<const Activation> activations) {
  Distance s = 0;
  for (Activation a : activations) s = std::max<Distance>(s, a) + 1;
  return s;
}

Distance cg_score(std::span<const Distance> keyword_distances) {
  Distance s = 0;
  for (Distance d : keyword_distances) {
    if (d == unreached) throw Error("central score of an incomplete row");
    s = std::max(s, d);
  }
  return s;
}

Distance marginal_score(std::span<const Distance> marginal_distances) {
  Distance s = 0;
  for (Distance d : marginal_distances) {
    if (d == unreached) throw Error("marginal score with an unreached keyword");
    s = std::max(s, d);
  }
  return s;
}

void ScoreParams::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error("gamma must lie in [0, 1]");
}

double rpg_score(Distance central, Distance marginal, const ScoreParams& params) {
  const double sc = central, sm = marginal;
  if (params.combination == Combination::additive) {
    return params.gamma * sc + (1.0 - params.gamma) * sm;
  }
  return std::pow(sc == 0 ? 1.0 : sc, params.gamma) *
         std::pow(sm == 0 ? 1.0 : sm, 1.0 - params.gamma);
}

double tie_break_sum(std::span<const EdgeId> edges, const FineWeights& weights) {
  double sum = 0.0;
  for (EdgeId e : edges) sum += weights.values.at(e);
  return sum;
}

bool rank_before(const RankKey& a, const RankKey& b) {
  if (a.primary != b.primary) return a.primary < b.primary;
  if (a.tie_break != b.tie_break) return a.tie_break < b.tie_break;
  return a.central_node < b.central_node;
}

std::vector<std::size_t> rank_order(std::span<const RankKey> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank_before(keys[a], keys[b]); });
  return order;
}

}  // namespace raks
