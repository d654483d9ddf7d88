#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raks/graph_store.hpp"

namespace raks {

// Node text plus a token -> sorted, duplicate-free posting list.
struct NodeTextIndex {
  std::vector<std::string> texts;
  std::unordered_map<std::string, std::vector<NodeId>> postings;

  friend bool operator==(const NodeTextIndex&, const NodeTextIndex&) = default;
};

// The node set a keyword denotes.
struct KeywordMatch {
  std::string keyword;
  std::vector<NodeId> nodes;
};

// Lowercases ASCII and splits on ASCII non-alphanumerics. Bytes >= 0x80 are
// kept inside tokens so UTF-8 words survive intact.
std::vector<std::string> tokenize(std::string_view text);

// Repeated entries for one node are concatenated.
NodeTextIndex build_text_index(std::size_t node_count,
                               std::span<const std::pair<NodeId, std::string>> node_texts);

// Conjunctive token match: nodes whose text contains every token of `keyword`.
// Throws KeywordUnresolved when nothing matches.
KeywordMatch lookup_keyword(std::string_view keyword, const NodeTextIndex& index);

// `node_id<TAB>text` per line, node ids as they appear in the edge file.
std::vector<std::pair<NodeId, std::string>> parse_text_stream(std::istream& in,
                                                              const std::string& source_name,
                                                              const KnowledgeGraph& graph);
std::vector<std::pair<NodeId, std::string>> read_text_file(const std::filesystem::path& path,
                                                           const KnowledgeGraph& graph);

}  // namespace raks
