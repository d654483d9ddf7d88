#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "raks/error.hpp"
#include "raks/index_io.hpp"
#include "raks/parallel.hpp"
#include "raks/search.hpp"
#include "raks/synth.hpp"

namespace raks::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct BuildArgs {
  std::string edges, texts, out;
  double alpha = 0.5;
  std::size_t sample_pairs = 10000;
  std::uint64_t seed = 1;
};

struct QueryArgs {
  std::string index;
  std::vector<std::string> central, marginal;
  std::size_t topk = 20;
  std::size_t beam = 0;
  double gamma = 0.5;
  std::optional<double> alpha;
  Distance max_level = 20;
  int threads = parallel::hardware_threads();
  double time_limit_s = 500.0;
  std::string format = "json";
  std::string combination = "additive";
  std::string termination = "conservative";
  std::string kernel = "openmp";
};

struct GenArgs {
  SynthParams params;
  std::string out_prefix;
};

struct BenchArgs {
  std::string index, queries;
  std::vector<int> threads{1};
  std::size_t reps = 3;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const std::vector<Triple> triples = read_edge_file(a.edges);
  KnowledgeGraph graph = ingest_edges(triples);
  std::vector<std::pair<NodeId, std::string>> texts;
  if (a.texts.empty()) {
    for (NodeId v = 0; v < graph.node_count(); ++v) texts.emplace_back(v, graph.node_name(v));
  } else {
    texts = read_text_file(a.texts, graph);
  }
  NodeTextIndex text = build_text_index(graph.node_count(), texts);
  BuildOptions options;
  options.alpha = a.alpha;
  options.sample_pairs = a.sample_pairs;
  options.seed = a.seed;
  options.threads = parallel::hardware_threads();
  const SearchIndex index = build_search_index(std::move(graph), std::move(text), options);
  save_index(index, a.out);
  out << "graph\tnodes\tedges\ttriples\tlabels\tavg_hops\tdeviation\n";
  out << a.out << '\t' << index.graph.node_count() << '\t' << index.graph.edge_count() << '\t'
      << index.graph.edge_count() / 2 << '\t' << index.graph.label_count() << '\t'
      << std::fixed << std::setprecision(2) << index.coarsening.avg_hops << '\t'
      << index.hops_stddev << '\n';
  return exit_ok;
}

int cmd_stats(const std::string& path, std::ostream& out) {
  const SearchIndex index = load_index(path);
  out << "nodes\t" << index.graph.node_count() << '\n'
      << "edges\t" << index.graph.edge_count() << '\n'
      << "labels\t" << index.graph.label_count() << '\n'
      << "alpha\t" << index.coarsening.alpha << '\n'
      << "avg_hops\t" << index.coarsening.avg_hops << '\n'
      << "deviation\t" << index.hops_stddev << '\n';
  std::vector<std::size_t> bins(10, 0);
  for (double w : index.weights.values) {
    bins[std::min<std::size_t>(9, static_cast<std::size_t>(w * 10))]++;
  }
  out << "fine weight histogram\n";
  for (std::size_t b = 0; b < bins.size(); ++b) {
    out << '[' << b / 10.0 << ", " << (b + 1) / 10.0 << (b == 9 ? "]" : ")") << '\t' << bins[b]
        << '\n';
  }
  std::map<Activation, std::size_t> levels;
  for (Activation a : index.activations.values) levels[a]++;
  out << "activation histogram\n";
  for (const auto& [level, count] : levels) out << level << '\t' << count << '\n';
  return exit_ok;
}

SearchParams params_of(const QueryArgs& a) {
  SearchParams p;
  p.score.gamma = a.gamma;
  p.score.combination =
      a.combination == "multiplicative" ? Combination::multiplicative : Combination::additive;
  p.topk = a.topk;
  p.beam = a.beam;
  p.max_level = a.max_level;
  p.threads = a.threads;
  p.time_limit_s = a.time_limit_s;
  p.termination = a.termination == "eager" ? Termination::eager : Termination::conservative;
  p.kernel = a.kernel == "serial" ? Kernel::serial : Kernel::openmp;
  return p;
}

int cmd_query(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  QueryEcho echo{a.central, a.marginal, params_of(a), 0.0};
  SearchIndex index;
  try {
    index = load_index(a.index);
    if (a.alpha && *a.alpha != index.coarsening.alpha) recoarsen(index, *a.alpha, a.threads);
    echo.alpha = index.coarsening.alpha;
    echo.params.validate();
  } catch (const Error& e) {
    if (a.format == "json") out << error_document(echo, {e.what()}).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_error;
  }

  Query query;
  try {
    query = resolve_query(index.text, a.central, a.marginal);
  } catch (const QueryError& e) {
    if (a.format == "json") out << error_document(echo, e.problems()).dump(2) << '\n';
    for (const auto& p : e.problems()) err << "error: " << p << '\n';
    return exit_error;
  }

  const SearchInput input{index.graph, index.activations, index.weights};
  const SearchOutput output = search(input, query, echo.params);
  for (const auto& d : output.diagnostics) err << "note: " << d << '\n';
  if (a.format == "json") {
    out << result_document(index, echo, output).dump(2) << '\n';
  } else if (a.format == "dot") {
    out << to_dot(index, output.results);
  } else {
    out << to_text(index, echo, output);
  }
  return output.results.empty() ? exit_no_results : exit_ok;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const SynthGraph g = generate_graph(a.params);
  write_synth(g, a.out_prefix);
  std::map<std::string, std::size_t> counts;
  for (const Triple& t : g.triples) counts[t.label]++;
  std::vector<std::pair<std::string, std::size_t>> rows(counts.begin(), counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  out << "wrote " << a.out_prefix << ".edges.tsv and " << a.out_prefix << ".texts.tsv\n";
  out << "label\tedges\tshare\n";
  for (const auto& [label, n] : rows) {
    out << label << '\t' << n << '\t' << std::fixed << std::setprecision(4)
        << static_cast<double>(n) / static_cast<double>(g.triples.size()) << '\n';
  }
  return exit_ok;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool same_results(const std::vector<SearchResult>& a, const std::vector<SearchResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].combined_score != b[i].combined_score || a[i].tie_break != b[i].tie_break ||
        a[i].central_node != b[i].central_node || a[i].nodes != b[i].nodes ||
        a[i].edges != b[i].edges) {
      return false;
    }
  }
  return true;
}

struct Moments {
  double mean = 0.0, stddev = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0.0;
    for (double x : xs) sq += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return m;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const SearchIndex index = load_index(a.index);
  const SearchInput input{index.graph, index.activations, index.weights};
  std::ifstream qin(a.queries);
  if (!qin) throw Error("cannot open query file " + a.queries);

  struct Spec {
    std::vector<std::string> central, marginal;
  };
  std::vector<Spec> specs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(qin, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    Spec s{split_list(line.substr(0, tab)),
           tab == std::string::npos ? std::vector<std::string>{}
                                    : split_list(line.substr(tab + 1))};
    if (s.central.empty()) throw ParseError(a.queries, line_no, "no central keyword");
    specs.push_back(std::move(s));
  }

  out << "query\tthreads\treps\tresults\ttotal_mean_s\ttotal_sd_s\tcentral_mean_s\tcentral_sd_s"
         "\tmarginal_mean_s\tmarginal_sd_s\n";
  out << std::fixed << std::setprecision(6);
  bool consistent = true;
  for (std::size_t qi = 0; qi < specs.size(); ++qi) {
    const Query query = resolve_query(index.text, specs[qi].central, specs[qi].marginal);
    std::optional<std::vector<SearchResult>> reference;
    for (int t : a.threads) {
      SearchParams params;
      params.threads = t;
      std::vector<double> total, central, marginal;
      std::size_t count = 0;
      for (std::size_t r = 0; r < a.reps; ++r) {
        const auto start = Clock::now();
        const SearchOutput o = search(input, query, params);
        total.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        central.push_back(o.stats.central_seconds);
        marginal.push_back(o.stats.marginal_seconds);
        count = o.results.size();
        if (!reference) {
          reference = o.results;
        } else if (!same_results(*reference, o.results)) {
          consistent = false;
          err << "error: query " << qi + 1 << " differs at " << t << " threads\n";
        }
      }
      const Moments mt = moments(total), mc = moments(central), mm = moments(marginal);
      out << qi + 1 << '\t' << t << '\t' << a.reps << '\t' << count << '\t' << mt.mean << '\t'
          << mt.stddev << '\t' << mc.mean << '\t' << mc.stddev << '\t' << mm.mean << '\t'
          << mm.stddev << '\n';
    }
  }
  return consistent ? exit_ok : exit_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial pattern keyword search over labeled knowledge graphs", "raks"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a search index from an edge file");
  b->add_option("--edges", build.edges, "src<TAB>label<TAB>dst per line")->required();
  b->add_option("--texts", build.texts, "node_id<TAB>text per line (default: node id)");
  b->add_option("--alpha", build.alpha, "coarsening pivot in (0,1)")->capture_default_str();
  b->add_option("--sample-pairs", build.sample_pairs, "node pairs sampled for average hops")
      ->capture_default_str();
  b->add_option("--seed", build.seed, "sampling seed")->capture_default_str();
  b->add_option("--out", build.out, "index file to write")->required();

  std::string stats_index;
  auto* s = app.add_subcommand("stats", "Print index statistics");
  s->add_option("--index", stats_index)->required();

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Run a radial pattern query");
  q->add_option("--index", query.index)->required();
  q->add_option("--central", query.central, "central keyword (repeatable)")->required();
  q->add_option("--marginal", query.marginal, "marginal keyword (repeatable)");
  q->add_option("--topk", query.topk)->capture_default_str();
  q->add_option("--gamma", query.gamma, "weight of the central score")->capture_default_str();
  q->add_option("--alpha", query.alpha, "re-coarsen with this alpha");
  q->add_option("--max-level", query.max_level)->capture_default_str();
  q->add_option("--threads", query.threads)->capture_default_str();
  q->add_option("--time-limit-s", query.time_limit_s)->capture_default_str();
  q->add_option("--format", query.format)
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  q->add_option("--combination", query.combination)
      ->check(CLI::IsMember({"additive", "multiplicative"}))
      ->capture_default_str();
  q->add_option("--termination", query.termination)
      ->check(CLI::IsMember({"conservative", "eager"}))
      ->capture_default_str();
  q->add_option("--beam", query.beam)->group("");
  q->add_option("--kernel", query.kernel)->check(CLI::IsMember({"openmp", "serial"}))->group("");
  // Each --central/--marginal takes exactly one keyword.
  for (auto* opt : {q->get_option("--central"), q->get_option("--marginal")}) {
    opt->allow_extra_args(false);
  }

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic graph");
  g->add_option("--nodes", gen.params.nodes)->required();
  g->add_option("--edges", gen.params.edges)->required();
  g->add_option("--labels", gen.params.labels)->capture_default_str();
  g->add_option("--skew", gen.params.skew, "Zipf exponent of the label distribution")
      ->capture_default_str();
  g->add_option("--seed", gen.params.seed)->capture_default_str();
  g->add_option("--out-prefix", gen.out_prefix)->required();

  BenchArgs bench;
  std::string bench_threads = "1";
  auto* bn = app.add_subcommand("bench", "Time queries across thread counts");
  bn->add_option("--index", bench.index)->required();
  bn->add_option("--queries", bench.queries,
                 "central,keywords<TAB>marginal,keywords per line")
      ->required();
  bn->add_option("--threads", bench_threads, "comma-separated thread counts")
      ->capture_default_str();
  bn->add_option("--reps", bench.reps)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*b) return cmd_build(build, out);
    if (*s) return cmd_stats(stats_index, out);
    if (*q) return cmd_query(query, out, err);
    if (*g) return cmd_gen(gen, out);
    if (*bn) {
      bench.threads.clear();
      for (const auto& t : split_list(bench_threads)) bench.threads.push_back(std::stoi(t));
      if (bench.threads.empty()) throw Error("no thread counts given");
      return cmd_bench(bench, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

}  // namespace raks::cli
