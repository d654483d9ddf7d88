#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "raks/types.hpp"

namespace raks {

struct Triple {
  std::string src;
  std::string label;
  std::string dst;
};

// Forward adjacency entry. Every ingested triple (u, L, v) yields u->v with
// inverse=false and v->u with inverse=true, both carrying label L.
struct OutEdge {
  NodeId target = 0;
  LabelId label = 0;
  bool inverse = false;

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

// Reverse adjacency entry: the forward edge `edge` enters this node from `source`.
struct InEdge {
  NodeId source = 0;
  EdgeId edge = 0;

  friend bool operator==(const InEdge&, const InEdge&) = default;
};

/// Bidirected labeled multigraph in compressed sparse row form.
///
/// Forward edges are addressed by a dense EdgeId (their CSR slot); the reverse
/// adjacency is derived from the forward one and refers back to those ids, so
/// per-edge arrays (weights, activation levels) are indexed by EdgeId only.
/// Immutable after construction.
class KnowledgeGraph {
 public:
  KnowledgeGraph() : offsets_{0}, in_offsets_{0} {}

  // Validates the CSR arrays and derives the reverse adjacency.
  KnowledgeGraph(std::vector<std::string> node_names, std::vector<std::string> labels,
                 std::vector<EdgeId> offsets, std::vector<OutEdge> edges);

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t label_count() const noexcept { return labels_.size(); }

  EdgeId first_edge(NodeId v) const { return offsets_[v]; }
  EdgeId end_edge(NodeId v) const { return offsets_[v + 1]; }
  std::span<const OutEdge> out_edges(NodeId v) const {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }
  std::span<const InEdge> in_edges(NodeId v) const {
    return {in_edges_.data() + in_offsets_[v], in_edges_.data() + in_offsets_[v + 1]};
  }
  const OutEdge& edge(EdgeId e) const { return edges_[e]; }
  NodeId source(EdgeId e) const { return sources_[e]; }

  std::span<const EdgeId> offsets() const noexcept { return offsets_; }
  std::span<const OutEdge> edges() const noexcept { return edges_; }

  const std::string& node_name(NodeId v) const { return names_[v]; }
  const std::vector<std::string>& node_names() const noexcept { return names_; }
  std::optional<NodeId> find_node(const std::string& name) const;

  const std::string& label_name(LabelId l) const { return labels_[l]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<LabelId> find_label(const std::string& name) const;

  // Structural equality: names, labels and forward CSR (the rest is derived).
  friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    return a.names_ == b.names_ && a.labels_ == b.labels_ && a.offsets_ == b.offsets_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> name_index_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, LabelId> label_index_;

  std::vector<EdgeId> offsets_;
  std::vector<OutEdge> edges_;
  std::vector<NodeId> sources_;

  std::vector<EdgeId> in_offsets_;
  std::vector<InEdge> in_edges_;
};

// String ids and labels are densified in first-seen order (src before dst).
// Duplicate triples are kept. Forward entries of a node follow ingestion order.
KnowledgeGraph ingest_edges(std::span<const Triple> triples);

// `src<TAB>label<TAB>dst` per line; blank lines and lines starting with '#' are skipped.
std::vector<Triple> parse_edge_stream(std::istream& in, const std::string& source_name);
std::vector<Triple> read_edge_file(const std::filesystem::path& path);

}  // namespace raks
