#include "raks/index_io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "raks/error.hpp"

namespace raks {

static_assert(std::endian::native == std::endian::little,
              "index encoding assumes a little-endian host");

namespace {

class Writer {
 public:
  template <typename T>
  void put(T value) {
    char raw[sizeof(T)];
    std::memcpy(raw, &value, sizeof(T));
    out_.append(raw, sizeof(T));
  }
  void put_string(const std::string& s) {
    put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_ += s;
  }
  void put_bytes(const char* data, std::size_t n) { out_.append(data, n); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  template <typename T>
  T get() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  std::string get_string() {
    const auto n = get<std::uint32_t>();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  // Bounds a count read from the file by the bytes left, so a corrupt count
  // fails as truncation instead of a huge allocation.
  std::uint64_t get_count(std::size_t min_item_bytes) {
    const auto n = get<std::uint64_t>();
    if (min_item_bytes > 0 && n > remaining() / min_item_bytes) {
      throw IndexFormatError("truncated index file");
    }
    return n;
  }
  std::size_t remaining() const { return in_.size() - pos_; }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw IndexFormatError("truncated index file");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

SearchIndex build_search_index(KnowledgeGraph graph, NodeTextIndex text,
                               const BuildOptions& options) {
  SearchIndex index;
  index.graph = std::move(graph);
  index.text = std::move(text);
  index.weights = compute_fine_weights(index.graph);
  index.coarsening.alpha = options.alpha;
  if (index.graph.node_count() > 1) {
    const HopEstimate hops =
        estimate_avg_hops(index.graph, options.sample_pairs, options.seed, options.threads);
    index.coarsening.avg_hops = hops.mean;
    index.hops_stddev = hops.stddev;
  }
  index.activations = coarsen(index.weights, index.coarsening, options.threads);
  return index;
}

void recoarsen(SearchIndex& index, double alpha, int threads) {
  index.coarsening.alpha = alpha;
  index.activations = coarsen(index.weights, index.coarsening, threads);
}

std::string encode_index(const SearchIndex& index) {
  const KnowledgeGraph& g = index.graph;
  Writer w;
  w.put_bytes(index_magic, sizeof index_magic);
  w.put<std::uint8_t>(index_version);
  w.put<std::uint64_t>(g.node_count());
  w.put<std::uint64_t>(g.edge_count());
  w.put<std::uint64_t>(g.label_count());
  w.put<double>(index.coarsening.alpha);
  w.put<double>(index.coarsening.avg_hops);
  w.put<double>(index.hops_stddev);

  for (const std::string& name : g.node_names()) w.put_string(name);
  for (const std::string& label : g.labels()) w.put_string(label);
  for (EdgeId off : g.offsets()) w.put<std::uint64_t>(off);
  for (const OutEdge& e : g.edges()) {
    w.put<std::uint32_t>(e.target);
    w.put<std::uint32_t>(e.label);
    w.put<std::uint8_t>(e.inverse ? 1 : 0);
  }
  for (double fw : index.weights.values) w.put<double>(fw);
  for (Activation a : index.activations.values) w.put<std::uint32_t>(a);

  for (const std::string& text : index.text.texts) w.put_string(text);
  // Tokens in sorted order so equal indexes encode to equal bytes.
  std::vector<const std::string*> tokens;
  tokens.reserve(index.text.postings.size());
  for (const auto& entry : index.text.postings) tokens.push_back(&entry.first);
  std::sort(tokens.begin(), tokens.end(), [](const auto* a, const auto* b) { return *a < *b; });
  w.put<std::uint64_t>(tokens.size());
  for (const std::string* token : tokens) {
    const auto& nodes = index.text.postings.at(*token);
    w.put_string(*token);
    w.put<std::uint64_t>(nodes.size());
    for (NodeId v : nodes) w.put<std::uint32_t>(v);
  }
  return w.take();
}

SearchIndex decode_index(std::string_view bytes) {
  if (bytes.size() < sizeof index_magic ||
      std::memcmp(bytes.data(), index_magic, sizeof index_magic) != 0) {
    throw IndexFormatError("bad magic: not a RAKS index");
  }
  Reader r(bytes.substr(sizeof index_magic));
  const auto version = r.get<std::uint8_t>();
  if (version != index_version) {
    throw IndexFormatError("unsupported index version " + std::to_string(version));
  }
  const auto n = r.get<std::uint64_t>();
  const auto m = r.get<std::uint64_t>();
  const auto labels = r.get<std::uint64_t>();
  SearchIndex index;
  index.coarsening.alpha = r.get<double>();
  index.coarsening.avg_hops = r.get<double>();
  index.hops_stddev = r.get<double>();
  // Every node, label and edge takes at least 4 bytes on disk.
  if (n > r.remaining() / 4 || m > r.remaining() / 4 || labels > r.remaining() / 4) {
    throw IndexFormatError("truncated index file");
  }

  std::vector<std::string> names(n), label_names(labels);
  for (auto& s : names) s = r.get_string();
  for (auto& s : label_names) s = r.get_string();
  std::vector<EdgeId> offsets(n + 1);
  for (auto& off : offsets) off = r.get<std::uint64_t>();
  std::vector<OutEdge> edges(m);
  for (auto& e : edges) {
    e.target = r.get<std::uint32_t>();
    e.label = r.get<std::uint32_t>();
    e.inverse = r.get<std::uint8_t>() != 0;
  }
  index.weights.values.resize(m);
  for (double& fw : index.weights.values) fw = r.get<double>();
  index.activations.values.resize(m);
  for (Activation& a : index.activations.values) a = r.get<std::uint32_t>();

  index.text.texts.resize(n);
  for (auto& s : index.text.texts) s = r.get_string();
  const auto token_count = r.get_count(12);
  for (std::uint64_t t = 0; t < token_count; ++t) {
    std::string token = r.get_string();
    std::vector<NodeId> nodes(r.get_count(4));
    for (NodeId& v : nodes) {
      v = r.get<std::uint32_t>();
      if (v >= n) throw IndexFormatError("posting refers to unknown node");
    }
    index.text.postings.emplace(std::move(token), std::move(nodes));
  }
  if (!r.done()) throw IndexFormatError("trailing bytes after index");

  try {
    index.graph = KnowledgeGraph(std::move(names), std::move(label_names), std::move(offsets),
                                 std::move(edges));
  } catch (const Error& e) {
    throw IndexFormatError(std::string("corrupt graph section: ") + e.what());
  }
  return index;
}

void save_index(const SearchIndex& index, const std::filesystem::path& path) {
  const std::string bytes = encode_index(index);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write index file " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing index file " + path.string());
}

SearchIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_index(bytes);
}

}  // namespace raks
