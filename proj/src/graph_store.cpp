#include "raks/graph_store.hpp"

#include <fstream>
#include <istream>
#include <utility>

#include "raks/error.hpp"

namespace raks {

namespace {

template <typename Id>
Id intern(const std::string& key, std::vector<std::string>& table,
          std::unordered_map<std::string, Id>& index) {
  auto [it, inserted] = index.try_emplace(key, static_cast<Id>(table.size()));
  if (inserted) table.push_back(key);
  return it->second;
}

}  // namespace

KnowledgeGraph::KnowledgeGraph(std::vector<std::string> node_names,
                               std::vector<std::string> labels, std::vector<EdgeId> offsets,
                               std::vector<OutEdge> edges)
    : names_(std::move(node_names)),
      labels_(std::move(labels)),
      offsets_(std::move(offsets)),
      edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  if (offsets_.size() != n + 1 || offsets_.front() != 0 || offsets_.back() != edges_.size()) {
    throw Error("CSR offsets do not match node/edge counts");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) throw Error("CSR offsets are not monotone");
  }
  for (const OutEdge& e : edges_) {
    if (e.target >= n) throw Error("edge target out of range");
    if (e.label >= labels_.size()) throw Error("edge label out of range");
  }

  name_index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!name_index_.try_emplace(names_[v], static_cast<NodeId>(v)).second) {
      throw Error("duplicate node name '" + names_[v] + "'");
    }
  }
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (!label_index_.try_emplace(labels_[l], static_cast<LabelId>(l)).second) {
      throw Error("duplicate label '" + labels_[l] + "'");
    }
  }

  sources_.resize(edges_.size());
  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (EdgeId e = offsets_[v]; e < offsets_[v + 1]; ++e) {
      sources_[e] = static_cast<NodeId>(v);
      ++in_offsets_[edges_[e].target + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];

  in_edges_.resize(edges_.size());
  std::vector<EdgeId> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    in_edges_[cursor[edges_[e].target]++] = InEdge{sources_[e], e};
  }
}

std::optional<NodeId> KnowledgeGraph::find_node(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LabelId> KnowledgeGraph::find_label(const std::string& name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

KnowledgeGraph ingest_edges(std::span<const Triple> triples) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> name_index;
  std::vector<std::string> labels;
  std::unordered_map<std::string, LabelId> label_index;

  struct Dense {
    NodeId src;
    LabelId label;
    NodeId dst;
  };
  std::vector<Dense> dense;
  dense.reserve(triples.size());
  for (const Triple& t : triples) {
    if (t.src.empty() || t.label.empty() || t.dst.empty()) {
      throw Error("triple with an empty field");
    }
    NodeId s = intern<NodeId>(t.src, names, name_index);
    LabelId l = intern<LabelId>(t.label, labels, label_index);
    NodeId d = intern<NodeId>(t.dst, names, name_index);
    dense.push_back({s, l, d});
  }

  const std::size_t n = names.size();
  std::vector<EdgeId> offsets(n + 1, 0);
  for (const Dense& t : dense) {
    ++offsets[t.src + 1];
    ++offsets[t.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<OutEdge> edges(2 * dense.size());
  std::vector<EdgeId> cursor(offsets.begin(), offsets.end() - 1);
  for (const Dense& t : dense) {
    edges[cursor[t.src]++] = OutEdge{t.dst, t.label, false};
    edges[cursor[t.dst]++] = OutEdge{t.src, t.label, true};
  }
  return KnowledgeGraph(std::move(names), std::move(labels), std::move(offsets),
                        std::move(edges));
}

std::vector<Triple> parse_edge_stream(std::istream& in, const std::string& source_name) {
  std::vector<Triple> triples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const auto first = line.find('\t');
    const auto second = first == std::string::npos ? first : line.find('\t', first + 1);
    if (second == std::string::npos || line.find('\t', second + 1) != std::string::npos) {
      throw ParseError(source_name, line_no, "expected src<TAB>label<TAB>dst");
    }
    Triple t{line.substr(0, first), line.substr(first + 1, second - first - 1),
             line.substr(second + 1)};
    if (t.src.empty() || t.label.empty() || t.dst.empty()) {
      throw ParseError(source_name, line_no, "empty field");
    }
    triples.push_back(std::move(t));
  }
  return triples;
}

std::vector<Triple> read_edge_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge file " + path.string());
  return parse_edge_stream(in, path.string());
}

}  // namespace raks
