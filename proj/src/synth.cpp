#include "raks/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "raks/error.hpp"

namespace raks {

ZipfSampler::ZipfSampler(std::size_t n, double s) : cdf_(n) {
  if (n == 0) throw Error("zipf sampler needs at least one rank");
  if (!(s >= 0.0)) throw Error("zipf skew must be non-negative");
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), s);
    cdf_[r] = total;
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::size_t ZipfSampler::operator()(Rng& rng) const {
  const double u = uniform_unit(rng);
  return static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

SynthGraph generate_graph(const SynthParams& p) {
  if (p.nodes < 2) throw Error("need at least two nodes");
  if (p.labels < 1) throw Error("need at least one label");
  Rng rng(p.seed);
  const ZipfSampler label_dist(p.labels, p.skew);
  const ZipfSampler word_dist(std::max<std::size_t>(10, p.nodes / 10), 1.0);

  auto name = [](std::size_t v) { return "n" + std::to_string(v); };
  SynthGraph g;
  g.triples.reserve(p.edges);
  const std::size_t tree = std::min(p.edges, p.nodes - 1);
  for (std::size_t i = 1; i <= tree; ++i) {
    const std::size_t parent = uniform_below(rng, i);
    g.triples.push_back({name(i), "L" + std::to_string(label_dist(rng)), name(parent)});
  }
  while (g.triples.size() < p.edges) {
    const std::size_t a = uniform_below(rng, p.nodes);
    const std::size_t b = uniform_below(rng, p.nodes);
    if (a == b) continue;
    g.triples.push_back({name(a), "L" + std::to_string(label_dist(rng)), name(b)});
  }

  g.texts.reserve(p.nodes);
  for (std::size_t v = 0; v < p.nodes; ++v) {
    std::string text = name(v);
    const std::size_t words = 1 + uniform_below(rng, 3);
    for (std::size_t k = 0; k < words; ++k) text += " w" + std::to_string(word_dist(rng));
    g.texts.emplace_back(name(v), std::move(text));
  }
  return g;
}

void write_synth(const SynthGraph& graph, const std::string& prefix) {
  std::ofstream edges(prefix + ".edges.tsv");
  std::ofstream texts(prefix + ".texts.tsv");
  if (!edges || !texts) throw Error("cannot write synthetic files with prefix " + prefix);
  for (const Triple& t : graph.triples) edges << t.src << '\t' << t.label << '\t' << t.dst << '\n';
  for (const auto& [id, text] : graph.texts) texts << id << '\t' << text << '\n';
  if (!edges || !texts) throw Error("failed writing synthetic files with prefix " + prefix);
}

}  // namespace raks
