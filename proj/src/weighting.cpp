#include "raks/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

#include "raks/error.hpp"
#include "raks/parallel.hpp"
#include "raks/rng.hpp"

namespace raks {

namespace {

std::uint64_t label_class(const OutEdge& e) {
  return (static_cast<std::uint64_t>(e.label) << 1) | (e.inverse ? 1u : 0u);
}

// Counts, for each item, how many items share its class. `classes` is scratch.
template <typename ClassOf>
void count_classes(std::size_t count, ClassOf class_of, std::vector<std::uint64_t>& classes,
                   std::vector<std::uint32_t>& out) {
  classes.resize(count);
  for (std::size_t i = 0; i < count; ++i) classes[i] = class_of(i);
  std::vector<std::uint64_t> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), classes[i]);
    out[i] = static_cast<std::uint32_t>(hi - lo);
  }
}

// BFS distance between a and b over the undirected view. The forward adjacency
// already holds both directions of every ingested triple, so out-edges suffice.
// Bidirectional: always grows the smaller frontier. Returns 0 when disconnected.
class HopCounter {
 public:
  explicit HopCounter(const KnowledgeGraph& graph)
      : graph_(graph), side_(graph.node_count(), 0), dist_(graph.node_count(), 0) {}

  std::uint32_t distance(NodeId a, NodeId b) {
    if (a == b) return 0;
    std::vector<NodeId> front_a{a}, front_b{b}, next;
    mark(a, 1, 0);
    mark(b, 2, 0);
    std::uint32_t depth_a = 0, depth_b = 0, found = 0;
    while (!front_a.empty() && !front_b.empty() && found == 0) {
      const bool grow_a = front_a.size() <= front_b.size();
      auto& front = grow_a ? front_a : front_b;
      const std::uint8_t mine = grow_a ? 1 : 2;
      std::uint32_t& depth = grow_a ? depth_a : depth_b;
      next.clear();
      std::uint32_t best = 0;
      for (NodeId u : front) {
        for (const OutEdge& e : graph_.out_edges(u)) {
          const NodeId v = e.target;
          if (side_[v] == 0) {
            mark(v, mine, depth + 1);
            next.push_back(v);
          } else if (side_[v] != mine) {
            const std::uint32_t total = depth + 1 + dist_[v];
            if (best == 0 || total < best) best = total;
          }
        }
      }
      ++depth;
      front.swap(next);
      found = best;
    }
    for (NodeId v : touched_) side_[v] = 0;
    touched_.clear();
    return found;
  }

 private:
  void mark(NodeId v, std::uint8_t side, std::uint32_t d) {
    side_[v] = side;
    dist_[v] = d;
    touched_.push_back(v);
  }

  const KnowledgeGraph& graph_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> touched_;
};

HopEstimate summarize(const std::vector<std::uint32_t>& hops, std::size_t attempts) {
  HopEstimate est;
  est.samples = hops.size();
  est.attempts = attempts;
  if (hops.empty()) return est;
  const double sum = std::accumulate(hops.begin(), hops.end(), 0.0);
  est.mean = sum / static_cast<double>(hops.size());
  if (hops.size() > 1) {
    double sq = 0.0;
    for (std::uint32_t h : hops) sq += (h - est.mean) * (h - est.mean);
    est.stddev = std::sqrt(sq / static_cast<double>(hops.size() - 1));
  }
  return est;
}

}  // namespace

void CoarseningParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  if (!(avg_hops > 0.0) || !std::isfinite(avg_hops)) throw Error("avg_hops must be positive");
}

std::vector<double> raw_fine_weights(const KnowledgeGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::uint32_t> out_count(graph.edge_count()), in_count(graph.edge_count());

  parallel::region(omp_get_max_threads(), [&] {
    std::vector<std::uint64_t> classes;
    std::vector<std::uint32_t> counts;
#pragma omp for schedule(dynamic, 256)
    for (std::size_t v = 0; v < n; ++v) {
      const auto out = graph.out_edges(static_cast<NodeId>(v));
      count_classes(out.size(), [&](std::size_t i) { return label_class(out[i]); }, classes,
                    counts);
      const EdgeId base = graph.first_edge(static_cast<NodeId>(v));
      for (std::size_t i = 0; i < out.size(); ++i) out_count[base + i] = counts[i];

      const auto in = graph.in_edges(static_cast<NodeId>(v));
      count_classes(in.size(), [&](std::size_t i) { return label_class(graph.edge(in[i].edge)); },
                    classes, counts);
      for (std::size_t i = 0; i < in.size(); ++i) in_count[in[i].edge] = counts[i];
    }
  });

  std::vector<double> raw(graph.edge_count());
  for (EdgeId e = 0; e < raw.size(); ++e) {
    raw[e] = std::log(static_cast<double>(out_count[e]) + static_cast<double>(in_count[e]));
  }
  return raw;
}

FineWeights compute_fine_weights(const KnowledgeGraph& graph) {
  FineWeights fw{raw_fine_weights(graph)};
  if (fw.values.empty()) return fw;
  const auto [lo, hi] = std::minmax_element(fw.values.begin(), fw.values.end());
  const double wmin = *lo, wmax = *hi;
  if (wmax == wmin) {
    std::fill(fw.values.begin(), fw.values.end(), 0.0);
    return fw;
  }
  for (double& w : fw.values) w = (w - wmin) / (wmax - wmin);
  return fw;
}

HopEstimate estimate_avg_hops(const KnowledgeGraph& graph, std::size_t sample_pairs,
                              std::uint64_t seed, int threads) {
  if (graph.node_count() == 0) throw Error("cannot estimate hops of an empty graph");
  if (sample_pairs == 0) throw Error("sample_pairs must be positive");

  Rng rng(seed);
  const std::size_t budget = 10 * sample_pairs;
  const std::uint64_t n = graph.node_count();
  std::vector<std::uint32_t> accepted;
  accepted.reserve(sample_pairs);
  std::size_t attempts = 0;

  // Pairs are drawn serially from one stream and measured in parallel batches,
  // then accepted in draw order, so the result does not depend on `threads`.
  std::vector<std::pair<NodeId, NodeId>> batch;
  std::vector<std::uint32_t> hops;
  while (accepted.size() < sample_pairs && attempts < budget) {
    const std::size_t want = std::min(sample_pairs - accepted.size(), budget - attempts);
    batch.resize(want);
    for (auto& [a, b] : batch) {
      a = static_cast<NodeId>(uniform_below(rng, n));
      b = static_cast<NodeId>(uniform_below(rng, n));
    }
    hops.assign(want, 0);

    parallel::region(threads, [&] {
      HopCounter counter(graph);
#pragma omp for schedule(dynamic, 16) nowait
      for (std::size_t i = 0; i < want; ++i) {
        hops[i] = counter.distance(batch[i].first, batch[i].second);
      }
    });

    for (std::size_t i = 0; i < want; ++i) {
      ++attempts;
      if (hops[i] > 0) accepted.push_back(hops[i]);
    }
  }
  if (accepted.empty()) throw Error("no connected node pair found within the sampling budget");
  return summarize(accepted, attempts);
}

HopEstimate exact_avg_hops(const KnowledgeGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::uint32_t> hops;
  std::vector<std::uint32_t> dist(n);
  std::vector<NodeId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    queue.assign(1, static_cast<NodeId>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (const OutEdge& e : graph.out_edges(u)) {
        if (dist[e.target] == unreached) {
          dist[e.target] = dist[u] + 1;
          queue.push_back(e.target);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (t != s && dist[t] != unreached) hops.push_back(dist[t]);
    }
  }
  return summarize(hops, n * (n > 0 ? n - 1 : 0));
}

std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

Activation coarsen_weight(double w, const CoarseningParams& p) {
  double level;
  if (w <= p.alpha) {
    const double reward = p.avg_hops * (p.alpha - w) / p.alpha;
    level = p.avg_hops - reward;
  } else {
    const double penalty = p.avg_hops * (w - p.alpha) / (1.0 - p.alpha);
    level = p.avg_hops + penalty;
  }
  return static_cast<Activation>(std::max<std::int64_t>(0, round_half_up(level)));
}

ActivationLevels coarsen(const FineWeights& weights, const CoarseningParams& params,
                         int threads) {
  params.validate();
  ActivationLevels levels;
  levels.values.resize(weights.values.size());
  const std::size_t m = weights.values.size();
  parallel::region(threads, [&] {
#pragma omp for schedule(static)
    for (std::size_t e = 0; e < m; ++e) {
      levels.values[e] = coarsen_weight(weights.values[e], params);
    }
  });
  return levels;
}

Activation max_activation(const CoarseningParams& params) {
  return static_cast<Activation>(round_half_up(2.0 * params.avg_hops));
}

HalfOpenInterval bound_fine_weight(Activation level, const CoarseningParams& p) {
  p.validate();
  if (level > max_activation(p)) {
    throw Error("activation level " + std::to_string(level) + " outside [0, " +
                std::to_string(max_activation(p)) + "]");
  }
  const double a = static_cast<double>(level);
  const double pivot = static_cast<double>(round_half_up(p.avg_hops));
  const double reward_lo = p.alpha * (a - 0.5) / p.avg_hops;
  const double reward_hi = p.alpha * (a + 0.5) / p.avg_hops;
  const double penalty_lo = 1.0 + (a - 0.5 - 2.0 * p.avg_hops) * (1.0 - p.alpha) / p.avg_hops;
  const double penalty_hi = 1.0 + (a + 0.5 - 2.0 * p.avg_hops) * (1.0 - p.alpha) / p.avg_hops;
  if (a < pivot) return {reward_lo, reward_hi};
  if (a == pivot) return {reward_lo, penalty_hi};
  return {penalty_lo, penalty_hi};
}

double upper_bound_path_score(std::uint32_t length, Distance score,
                              const CoarseningParams& params) {
  if (length == 0) throw Error("path length must be at least 1");
  const std::uint32_t edges = length - 1;
  if (score < edges) {
    throw Error("coarse score " + std::to_string(score) + " is infeasible for a path of " +
                std::to_string(length) + " nodes");
  }
  const Activation cap = max_activation(params);
  double total = 0.0;
  for (std::uint32_t i = 0; i < edges; ++i) {
    const Activation level = std::min<Activation>(score - edges + i, cap);
    total += bound_fine_weight(level, params).hi;
  }
  return total;
}

}  // namespace raks
