#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "raks/graph_store.hpp"
#include "raks/text_index.hpp"
#include "raks/weighting.hpp"

namespace raks {

// Everything a query needs, as written by `raks build`.
struct SearchIndex {
  KnowledgeGraph graph;
  NodeTextIndex text;
  FineWeights weights;
  CoarseningParams coarsening;
  double hops_stddev = 0.0;
  ActivationLevels activations;

  friend bool operator==(const SearchIndex&, const SearchIndex&) = default;
};

struct BuildOptions {
  double alpha = 0.5;
  std::size_t sample_pairs = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Weights, hop estimate and activations for a graph with its text index.
SearchIndex build_search_index(KnowledgeGraph graph, NodeTextIndex text,
                               const BuildOptions& options);

// Re-coarsens the stored fine weights under a different alpha.
void recoarsen(SearchIndex& index, double alpha, int threads = 1);

inline constexpr char index_magic[4] = {'R', 'A', 'K', 'S'};
inline constexpr std::uint8_t index_version = 1;

std::string encode_index(const SearchIndex& index);
SearchIndex decode_index(std::string_view bytes);

void save_index(const SearchIndex& index, const std::filesystem::path& path);
SearchIndex load_index(const std::filesystem::path& path);

}  // namespace raks
