#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "raks/graph_store.hpp"
#include "raks/rng.hpp"

namespace raks {

// Zipf(s) over ranks 0..n-1: P(r) proportional to 1 / (r + 1)^s. s = 0 is uniform.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double s);
  std::size_t operator()(Rng& rng) const;
  std::size_t size() const { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

struct SynthParams {
  std::size_t nodes = 100;
  std::size_t edges = 400;
  std::size_t labels = 10;
  double skew = 1.0;
  std::uint64_t seed = 42;
};

struct SynthGraph {
  std::vector<Triple> triples;
  std::vector<std::pair<std::string, std::string>> texts;  // node id, text
};

// Node i is named n<i>. The first nodes-1 edges form a random tree (node i to a
// random earlier node) when `edges` allows, the rest join uniform random pairs
// of distinct nodes. Labels L<r> follow Zipf(skew). Each node's text is its
// name plus one to three words w<r> drawn Zipf(1) from max(10, nodes/10) words.
SynthGraph generate_graph(const SynthParams& params);

// Writes <prefix>.edges.tsv and <prefix>.texts.tsv.
void write_synth(const SynthGraph& graph, const std::string& prefix);

}  // namespace raks
