#include "raks/text_index.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>

#include "raks/error.hpp"

namespace raks {

namespace {

bool is_token_char(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char fold(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_token_char(c)) {
      current.push_back(fold(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

NodeTextIndex build_text_index(std::size_t node_count,
                               std::span<const std::pair<NodeId, std::string>> node_texts) {
  NodeTextIndex index;
  index.texts.resize(node_count);
  for (const auto& [node, text] : node_texts) {
    if (node >= node_count) {
      throw Error("text for unknown node id " + std::to_string(node));
    }
    std::string& slot = index.texts[node];
    if (!slot.empty()) slot.push_back(' ');
    slot += text;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    for (std::string& token : tokenize(index.texts[v])) {
      index.postings[std::move(token)].push_back(static_cast<NodeId>(v));
    }
  }
  // Nodes were visited in ascending order, so only adjacent duplicates remain.
  for (auto& [token, nodes] : index.postings) {
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  return index;
}

KeywordMatch lookup_keyword(std::string_view keyword, const NodeTextIndex& index) {
  const std::vector<std::string> tokens = tokenize(keyword);
  KeywordMatch match{std::string(keyword), {}};
  if (tokens.empty()) throw KeywordUnresolved(match.keyword);

  std::vector<const std::vector<NodeId>*> lists;
  for (const std::string& token : tokens) {
    auto it = index.postings.find(token);
    if (it == index.postings.end()) throw KeywordUnresolved(match.keyword);
    lists.push_back(&it->second);
  }
  std::sort(lists.begin(), lists.end(),
            [](const auto* a, const auto* b) { return a->size() < b->size(); });

  match.nodes = *lists.front();
  for (std::size_t i = 1; i < lists.size() && !match.nodes.empty(); ++i) {
    std::vector<NodeId> next;
    std::set_intersection(match.nodes.begin(), match.nodes.end(), lists[i]->begin(),
                          lists[i]->end(), std::back_inserter(next));
    match.nodes = std::move(next);
  }
  if (match.nodes.empty()) throw KeywordUnresolved(match.keyword);
  return match;
}

std::vector<std::pair<NodeId, std::string>> parse_text_stream(std::istream& in,
                                                              const std::string& source_name,
                                                              const KnowledgeGraph& graph) {
  std::vector<std::pair<NodeId, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(source_name, line_no, "expected node_id<TAB>text");
    }
    const std::string name = line.substr(0, tab);
    auto node = graph.find_node(name);
    if (!node) throw ParseError(source_name, line_no, "unknown node id '" + name + "'");
    out.emplace_back(*node, line.substr(tab + 1));
  }
  return out;
}

std::vector<std::pair<NodeId, std::string>> read_text_file(const std::filesystem::path& path,
                                                           const KnowledgeGraph& graph) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open text file " + path.string());
  return parse_text_stream(in, path.string(), graph);
}

}  // namespace raks
