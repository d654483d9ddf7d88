#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include "fixtures.hpp"
#include "raks/error.hpp"
#include "raks/graph_store.hpp"
#include "raks/index_io.hpp"
#include "raks/text_index.hpp"

using namespace raks;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("raks_gs_" + name);
}

}  // namespace

TEST_SUITE("graph-store") {

TEST_CASE("empty stream gives an empty graph") {
  const KnowledgeGraph g = ingest_edges({});
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("single triple is stored in both directions") {
  const std::vector<Triple> t{{"a", "L", "b"}};
  const KnowledgeGraph g = ingest_edges(t);
  REQUIRE(g.node_count() == 2);
  const NodeId a = *g.find_node("a"), b = *g.find_node("b");
  REQUIRE(g.out_edges(a).size() == 1);
  CHECK(g.out_edges(a)[0] == OutEdge{b, *g.find_label("L"), false});
  REQUIRE(g.out_edges(b).size() == 1);
  CHECK(g.out_edges(b)[0] == OutEdge{a, *g.find_label("L"), true});
}

TEST_CASE("chain a-b-c-a gives two forward entries per node") {
  const std::vector<Triple> t{{"a", "L", "b"}, {"b", "L", "c"}, {"c", "L", "a"}};
  const KnowledgeGraph g = ingest_edges(t);
  for (NodeId v = 0; v < 3; ++v) CHECK(g.out_edges(v).size() == 2);
}

TEST_CASE("ids are densified in first-seen order and duplicates are kept") {
  const std::vector<Triple> t{{"x", "L", "y"}, {"z", "M", "x"}, {"x", "L", "y"}};
  const KnowledgeGraph g = ingest_edges(t);
  CHECK(g.node_name(0) == "x");
  CHECK(g.node_name(1) == "y");
  CHECK(g.node_name(2) == "z");
  CHECK(g.edge_count() == 6);
  CHECK(g.out_edges(0).size() == 3);
}

TEST_CASE("random graphs: reverse adjacency is the transpose, edge count doubles") {
  Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    const std::size_t nodes = 2 + uniform_below(rng, 60), triples = uniform_below(rng, 200);
    const auto tg = testing::random_graph(rng, nodes, triples);
    const KnowledgeGraph& g = tg.graph;
    CHECK(g.edge_count() == 2 * triples);
    using Row = std::tuple<NodeId, NodeId, LabelId, bool>;
    std::vector<Row> forward, reverse;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (const OutEdge& e : g.out_edges(u)) forward.emplace_back(u, e.target, e.label, e.inverse);
      for (const InEdge& in : g.in_edges(u)) {
        const OutEdge& e = g.edge(in.edge);
        CHECK(e.target == u);
        CHECK(g.source(in.edge) == in.source);
        reverse.emplace_back(in.source, u, e.label, e.inverse);
      }
    }
    std::sort(forward.begin(), forward.end());
    std::sort(reverse.begin(), reverse.end());
    CHECK(forward == reverse);
    // Every forward entry has its mirror with the inverse flag flipped.
    std::vector<Row> mirrored;
    for (auto [u, v, l, inv] : forward) mirrored.emplace_back(v, u, l, !inv);
    std::sort(mirrored.begin(), mirrored.end());
    CHECK(mirrored == forward);
  }
}

TEST_CASE("edge stream parsing") {
  std::istringstream ok("# comment\n\na\tL\tb\r\nb\tM\tc\n");
  const auto triples = parse_edge_stream(ok, "mem");
  REQUIRE(triples.size() == 2);
  CHECK(triples[0].dst == "b");
  CHECK(triples[1].label == "M");

  std::istringstream bad("a\tL\tb\nonly\ttwo\n");
  try {
    parse_edge_stream(bad, "mem");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream empty_field("a\t\tb\n");
  CHECK_THROWS_AS(parse_edge_stream(empty_field, "mem"), ParseError);
}

TEST_CASE("tokenization and text index") {
  const std::vector<std::pair<NodeId, std::string>> texts{{0, "Lee Kuan Yew"}};
  const auto idx = build_text_index(1, texts);
  for (const char* tok : {"lee", "kuan", "yew"}) {
    REQUIRE(idx.postings.count(tok));
    CHECK(idx.postings.at(tok) == std::vector<NodeId>{0});
  }
  CHECK(tokenize("Asia-Pacific") == std::vector<std::string>{"asia", "pacific"});

  const std::vector<std::pair<NodeId, std::string>> usa{{0, "USA"}, {1, "usa trade"}};
  const auto idx2 = build_text_index(2, usa);
  CHECK(idx2.postings.at("usa") == std::vector<NodeId>{0, 1});
  CHECK(lookup_keyword("usa", idx2).nodes == std::vector<NodeId>{0, 1});
  CHECK(lookup_keyword("usa trade", idx2).nodes == std::vector<NodeId>{1});
  try {
    lookup_keyword("quantum", idx2);
    FAIL("expected unresolved keyword");
  } catch (const KeywordUnresolved& e) {
    CHECK(e.keyword() == "quantum");
  }
  const std::vector<std::pair<NodeId, std::string>> unknown{{5, "x"}};
  CHECK_THROWS_AS(build_text_index(2, unknown), Error);
}

TEST_CASE("lookup matches a brute-force scan") {
  Rng rng(11);
  const std::vector<std::string> vocab{"alpha", "beta", "gamma", "delta", "eps"};
  std::vector<std::pair<NodeId, std::string>> texts;
  const std::size_t n = 1000;
  for (NodeId v = 0; v < n; ++v) {
    std::string t;
    for (std::size_t k = 0, words = uniform_below(rng, 4); k < words; ++k) {
      t += (uniform_below(rng, 2) ? " " : "-") + vocab[uniform_below(rng, vocab.size())];
    }
    if (uniform_below(rng, 2)) std::transform(t.begin(), t.end(), t.begin(), ::toupper);
    texts.emplace_back(v, t);
  }
  const auto idx = build_text_index(n, texts);
  for (const std::string query : {"alpha", "beta gamma", "Delta EPS alpha", "gamma-beta"}) {
    std::vector<NodeId> expected;
    const auto want = tokenize(query);
    for (NodeId v = 0; v < n; ++v) {
      const auto have = tokenize(texts[v].second);
      if (std::all_of(want.begin(), want.end(), [&](const std::string& w) {
            return std::find(have.begin(), have.end(), w) != have.end();
          })) {
        expected.push_back(v);
      }
    }
    if (expected.empty()) {
      CHECK_THROWS_AS(lookup_keyword(query, idx), KeywordUnresolved);
    } else {
      CHECK(lookup_keyword(query, idx).nodes == expected);
    }
  }
}

TEST_CASE("index round trip and format errors") {
  const std::vector<Triple> t{{"a", "L", "b"}, {"b", "L", "c"}};
  KnowledgeGraph g = ingest_edges(t);
  const std::vector<std::pair<NodeId, std::string>> texts{{0, "first a"}, {2, "third"}};
  auto text = build_text_index(g.node_count(), texts);
  const SearchIndex index = build_search_index(std::move(g), std::move(text), {});
  const auto path = temp_path("chain.idx");
  save_index(index, path);
  const SearchIndex loaded = load_index(path);
  CHECK(loaded == index);
  CHECK(loaded.graph.in_edges(1).size() == 2);

  const std::string bytes = encode_index(index);
  CHECK(bytes.substr(0, 4) == "RAKS");
  CHECK(static_cast<int>(bytes[4]) == 1);

  { std::ofstream(temp_path("empty.idx"), std::ios::binary | std::ios::trunc); }
  CHECK_THROWS_WITH_AS(load_index(temp_path("empty.idx")), doctest::Contains("bad magic"),
                       IndexFormatError);

  std::string v2 = bytes;
  v2[4] = 2;
  CHECK_THROWS_WITH_AS(decode_index(v2), doctest::Contains("unsupported index version"),
                       IndexFormatError);

  for (std::size_t cut : {5ul, 20ul, bytes.size() / 2, bytes.size() - 1}) {
    CHECK_THROWS_AS(decode_index(std::string_view(bytes).substr(0, cut)), IndexFormatError);
  }
  std::filesystem::remove(path);
  std::filesystem::remove(temp_path("empty.idx"));
}

}  // TEST_SUITE
