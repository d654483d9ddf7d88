#include "raks/search.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <set>

#include <omp.h>

#include "raks/error.hpp"
#include "raks/parallel.hpp"

namespace raks {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body(i) for i in [0, count) across threads; rethrows the first failure
// in index order.
template <typename Body>
void parallel_each(std::size_t count, int threads, Body body) {
  if (count == 0) return;
  std::vector<std::exception_ptr> errors(count);
  parallel::region(threads, [&] {
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  });
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

RankKey key_of(const SearchResult& r) { return {r.combined_score, r.tie_break, r.central_node}; }

// Index of the k-th structurally distinct result in rank order.
std::optional<std::size_t> kth_distinct(const SearchInput& input,
                                        const std::vector<SearchResult>& results,
                                        std::size_t k) {
  std::vector<RankKey> keys;
  keys.reserve(results.size());
  for (const auto& r : results) keys.push_back(key_of(r));
  std::set<StructureKey> seen;
  for (std::size_t idx : rank_order(keys)) {
    if (!seen.insert(structure_key(input.graph, results[idx].nodes, results[idx].edges)).second) {
      continue;
    }
    if (seen.size() == k) return idx;
  }
  return std::nullopt;
}

}  // namespace

void SearchParams::validate() const {
  score.validate();
  if (topk < 1) throw Error("topk must be at least 1");
  if (beam_width() < topk) throw Error("beam width must be at least topk");
  if (max_level < 1) throw Error("max_level must be at least 1");
  if (threads < 1) throw Error("threads must be at least 1");
  if (!(time_limit_s > 0.0)) throw Error("time limit must be positive");
}

Query resolve_query(const NodeTextIndex& text, const std::vector<std::string>& central,
                    const std::vector<std::string>& marginal) {
  std::vector<std::string> problems;
  if (central.empty()) problems.push_back("at least one central keyword is required");
  Query q;
  auto resolve = [&](const std::vector<std::string>& words, std::vector<KeywordMatch>& out) {
    for (const std::string& w : words) {
      try {
        out.push_back(lookup_keyword(w, text));
      } catch (const KeywordUnresolved& e) {
        problems.push_back("keyword unresolved: " + e.keyword());
      }
    }
  };
  resolve(central, q.central);
  resolve(marginal, q.marginal);
  if (!problems.empty()) throw QueryError(std::move(problems));
  return q;
}

SearchResult make_result(const SearchInput& input, const CentralGraph& cg) {
  SearchResult r;
  r.combined_score = cg.score;
  r.central_score = cg.score;
  r.central_node = cg.central_node;
  r.nodes = cg.nodes;
  r.edges = cg.edges;
  r.central_keyword_nodes = cg.central_keyword_nodes;
  r.keyword_distances = cg.keyword_distances;
  r.tie_break = tie_break_sum(r.edges, input.weights);
  return r;
}

SearchResult make_result(const SearchInput& input, const RadialPatternGraph& rpg, bool ptc,
                         const ScoreParams& params) {
  SearchResult r = make_result(input, rpg.base);
  r.nodes = rpg.all_nodes();
  r.edges = rpg.all_edges();
  r.marginal_edges = rpg.marginal_edges;
  r.marginal_distances = rpg.marginal_distances;
  r.marginal_score = rpg.marginal_score;
  r.combined_score = rpg_score(rpg.base.score, rpg.marginal_score, params);
  r.tie_break = tie_break_sum(r.edges, input.weights);
  r.ptc = ptc;
  return r;
}

std::vector<SearchResult> rank_unique(const KnowledgeGraph& graph,
                                      std::vector<SearchResult> results, std::size_t limit) {
  std::vector<RankKey> keys;
  keys.reserve(results.size());
  for (const auto& r : results) keys.push_back(key_of(r));
  std::vector<SearchResult> out;
  std::set<StructureKey> seen;
  for (std::size_t idx : rank_order(keys)) {
    if (out.size() >= limit) break;
    if (!seen.insert(structure_key(graph, results[idx].nodes, results[idx].edges)).second) {
      continue;
    }
    out.push_back(std::move(results[idx]));
    out.back().rank = out.size();
  }
  return out;
}

CentralPhase run_central_phase(const SearchInput& input, std::span<const KeywordMatch> central,
                               const SearchParams& params, std::size_t beam,
                               Clock::time_point deadline) {
  CentralPhase phase;
  phase.state = init_state(input.graph.node_count(), central);
  std::set<StructureKey> distinct;

  ExploreOptions options;
  options.max_level = params.max_level;
  options.threads = params.threads;
  options.kernel = params.kernel;
  options.blocking = true;
  options.deadline = deadline;

  phase.stop = explore(
      input.graph, input.activations, phase.state, options,
      [&](const SearchState& state, std::span<const NodeId> joined) {
        std::vector<CentralGraph> found(joined.size());
        parallel_each(joined.size(), params.threads, [&](std::size_t i) {
          found[i] = recover_cg(input.graph, input.activations, state, joined[i]);
        });
        for (CentralGraph& cg : found) {
          cg.identified_level = state.level;
          distinct.insert(structure_key(input.graph, cg.nodes, cg.edges));
          phase.graphs.push_back(std::move(cg));
        }
        return beam > 0 && distinct.size() >= beam;
      });
  return phase;
}

std::vector<CentralGraph> select_central_graphs(const SearchInput& input,
                                                const std::vector<CentralGraph>& graphs,
                                                std::size_t w) {
  std::vector<SearchResult> results;
  results.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    results.push_back(make_result(input, graphs[i]));
  }
  std::vector<RankKey> keys;
  for (const auto& r : results) keys.push_back(key_of(r));
  std::vector<CentralGraph> out;
  std::set<StructureKey> seen;
  for (std::size_t idx : rank_order(keys)) {
    if (out.size() >= w) break;
    if (seen.insert(structure_key(input.graph, results[idx].nodes, results[idx].edges)).second) {
      out.push_back(graphs[idx]);
    }
  }
  return out;
}

MarginalPhase run_marginal_phase(const SearchInput& input, std::span<const CentralGraph> cgs,
                                 std::span<const KeywordMatch> marginal,
                                 const SearchParams& params, Clock::time_point deadline) {
  MarginalPhase phase;
  phase.state = init_state(input.graph.node_count(), marginal);
  phase.unresolved = cgs.size();
  if (cgs.empty()) return phase;

  std::vector<std::uint8_t> open(cgs.size(), 1);
  std::vector<SearchResult> accepted_results;

  ExploreOptions options;
  options.max_level = params.max_level;
  options.threads = params.threads;
  options.kernel = params.kernel;
  // With one marginal keyword every reached node would be "reached by all"
  // and the keyword nodes themselves would never expand.
  options.blocking = marginal.size() >= 2;
  options.deadline = deadline;

  phase.stop = explore(
      input.graph, input.activations, phase.state, options,
      [&](const SearchState& state, std::span<const NodeId>) {
        std::vector<std::size_t> ready;
        for (std::size_t c = 0; c < cgs.size(); ++c) {
          if (!open[c]) continue;
          const auto d = distances_to_set(state, cgs[c].central_keyword_nodes);
          if (std::find(d.begin(), d.end(), unreached) == d.end()) ready.push_back(c);
        }
        std::vector<RadialPatternGraph> rpgs(ready.size());
        std::vector<std::uint8_t> ptc(ready.size(), 0);
        parallel_each(ready.size(), params.threads, [&](std::size_t i) {
          rpgs[i] = recover_rpg(input.graph, input.activations, state, cgs[ready[i]]);
          ptc[i] = check_ptc(input.graph, rpgs[i], marginal) ? 1 : 0;
        });
        for (std::size_t i = 0; i < ready.size(); ++i) {
          open[ready[i]] = 0;
          --phase.unresolved;
          if (!ptc[i]) {
            ++phase.ptc_rejected;
            continue;
          }
          accepted_results.push_back(make_result(input, rpgs[i], true, params.score));
          phase.accepted.push_back(std::move(rpgs[i]));
        }
        if (phase.unresolved == 0) return true;

        const auto kth = kth_distinct(input, accepted_results, params.topk);
        if (!kth) return false;
        const SearchResult& k = accepted_results[*kth];
        Distance min_sc = unreached;
        double bound = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cgs.size(); ++c) {
          if (!open[c]) continue;
          min_sc = std::min(min_sc, cgs[c].score);
          bound = std::min(bound, rpg_score(cgs[c].score, state.level + 1, params.score));
        }
        if (params.termination == Termination::conservative) return k.combined_score < bound;
        return k.combined_score <= rpg_score(min_sc, *k.marginal_score, params.score);
      });
  return phase;
}

SearchOutput search(const SearchInput& input, const Query& query, const SearchParams& params) {
  params.validate();
  if (query.central.empty()) throw QueryError({"at least one central keyword is required"});
  if (input.activations.values.size() != input.graph.edge_count() ||
      input.weights.values.size() != input.graph.edge_count()) {
    throw Error("per-edge arrays do not match the graph");
  }
  SearchOutput out;
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(params.time_limit_s));

  CentralPhase central =
      run_central_phase(input, query.central, params, params.beam_width(), deadline);
  std::vector<CentralGraph> kept =
      select_central_graphs(input, central.graphs, params.beam_width());
  out.stats.central_levels = central.state.level;
  out.stats.central_stop = central.stop;
  out.stats.central_graphs_identified = central.graphs.size();
  out.stats.central_graphs_kept = kept.size();
  out.stats.central_seconds = seconds_since(start);
  if (central.stop == StopReason::deadline) {
    out.diagnostics.push_back("time limit reached during central search; results are partial");
  }
  if (kept.empty()) {
    out.diagnostics.push_back("no central connection within max level " +
                              std::to_string(params.max_level));
    return out;
  }

  if (query.marginal.empty()) {
    std::vector<SearchResult> results;
    for (const CentralGraph& cg : kept) results.push_back(make_result(input, cg));
    out.results = rank_unique(input.graph, std::move(results), params.topk);
    return out;
  }

  const auto marginal_start = Clock::now();
  MarginalPhase marginal = run_marginal_phase(input, kept, query.marginal, params, deadline);
  std::vector<SearchResult> results;
  for (const RadialPatternGraph& rpg : marginal.accepted) {
    results.push_back(make_result(input, rpg, true, params.score));
  }
  out.results = rank_unique(input.graph, std::move(results), params.topk);
  out.stats.marginal_levels = marginal.state.level;
  out.stats.marginal_stop = marginal.stop;
  out.stats.rpgs_resolved = marginal.accepted.size() + marginal.ptc_rejected;
  out.stats.ptc_rejected = marginal.ptc_rejected;
  out.stats.marginal_seconds = seconds_since(marginal_start);
  if (marginal.stop == StopReason::deadline) {
    out.diagnostics.push_back("time limit reached during marginal search; results are partial");
  }
  if (out.results.empty()) {
    out.diagnostics.push_back("no radial pattern graph connects the marginal keywords");
  }
  return out;
}

}  // namespace raks
