#include <doctest.h>

#include <algorithm>
#include <functional>

#include "raks/error.hpp"
#include "raks/ranking.hpp"
#include "raks/rng.hpp"

using namespace raks;

namespace {

// Straight from the recursive definition: score(p) = max(score(prefix), a_last) + 1.
Distance recursive_score(const std::vector<Activation>& seq, std::size_t len) {
  if (len == 0) return 0;
  return std::max<Distance>(recursive_score(seq, len - 1), seq[len - 1]) + 1;
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("path score examples") {
  CHECK(path_score(std::vector<Activation>{}) == 0);
  CHECK(path_score(std::vector<Activation>{2, 1}) == 4);
  CHECK(path_score(std::vector<Activation>{1, 5}) == 6);
}

TEST_CASE("path score properties") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Activation> seq(uniform_below(rng, 12));
    for (auto& a : seq) a = static_cast<Activation>(uniform_below(rng, 13));
    const Distance s = path_score(seq);
    REQUIRE(s == recursive_score(seq, seq.size()));
    REQUIRE(s >= seq.size());
    if (!seq.empty()) REQUIRE(s >= *std::max_element(seq.begin(), seq.end()) + 1);
    auto longer = seq;
    longer.push_back(static_cast<Activation>(uniform_below(rng, 13)));
    REQUIRE(path_score(longer) > s);
  }
}

TEST_CASE("central and marginal scores") {
  CHECK(cg_score(std::vector<Distance>{2, 2}) == 2);
  CHECK(cg_score(std::vector<Distance>{0}) == 0);
  CHECK(cg_score(std::vector<Distance>{3, 1, 2}) == 3);
  CHECK(marginal_score(std::vector<Distance>{2, 2}) == 2);
  CHECK(marginal_score(std::vector<Distance>{4}) == 4);
  CHECK(marginal_score(std::vector<Distance>{1, 3, 2}) == 3);
  CHECK_THROWS_AS(cg_score(std::vector<Distance>{1, unreached}), Error);
}

TEST_CASE("combined score") {
  ScoreParams p;
  p.gamma = 1.0;
  CHECK(rpg_score(2, 4, p) == 2.0);
  p.gamma = 0.0;
  CHECK(rpg_score(2, 4, p) == 4.0);
  p.gamma = 0.5;
  CHECK(rpg_score(2, 4, p) == 3.0);
  for (double g : {0.0, 0.3, 0.5, 1.0}) {
    p.gamma = g;
    CHECK(rpg_score(2, 2, p) == doctest::Approx(2.0));
  }
  p.combination = Combination::multiplicative;
  p.gamma = 0.5;
  CHECK(rpg_score(4, 9, p) == doctest::Approx(6.0));
  CHECK(rpg_score(0, 4, p) == doctest::Approx(2.0));
  p.gamma = 1.5;
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("rank order") {
  std::vector<RankKey> keys{{3, 0, 0}, {2, 0, 1}};
  CHECK(rank_order(keys) == std::vector<std::size_t>{1, 0});
  keys = {{2, 1.2, 0}, {2, 0.7, 1}};
  CHECK(rank_order(keys) == std::vector<std::size_t>{1, 0});
  keys = {{2, 0.5, 9}, {2, 0.5, 4}};
  CHECK(rank_order(keys) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("rank order does not depend on input order") {
  Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    std::vector<RankKey> keys(1 + uniform_below(rng, 20));
    NodeId id = 0;
    for (auto& k : keys) {
      k = {static_cast<double>(uniform_below(rng, 4)), uniform_below(rng, 3) * 0.5, id++};
    }
    auto ordered = [&](std::vector<RankKey> ks) {
      std::vector<NodeId> ids;
      for (std::size_t i : rank_order(ks)) ids.push_back(ks[i].central_node);
      return ids;
    };
    const auto expected = ordered(keys);
    for (std::size_t i = keys.size(); i > 1; --i) std::swap(keys[i - 1], keys[uniform_below(rng, i)]);
    REQUIRE(ordered(keys) == expected);
  }
}

TEST_CASE("tie break sums fine weights") {
  FineWeights w{{0.25, 0.5, 1.0}};
  CHECK(tie_break_sum(std::vector<EdgeId>{0, 2}, w) == 1.25);
  CHECK(tie_break_sum(std::vector<EdgeId>{}, w) == 0.0);
}

}  // TEST_SUITE
