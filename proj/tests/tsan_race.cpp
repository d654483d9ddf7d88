// Runs the large synthetic queries with 8 threads. Built with
// -fsanitize=thread; any report makes the run fail.

#include <iostream>

#include "raks/index_io.hpp"
#include "raks/search.hpp"
#include "synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: raks_tsan_race INDEX\n";
    return 2;
  }
  const raks::SearchIndex index = raks::load_index(argv[1]);
  const raks::SearchInput input{index.graph, index.activations, index.weights};
  raks::SearchParams params;
  params.threads = 8;
  std::size_t total = 0;
  for (const auto& q : raks::testing::synthetic_queries()) {
    const raks::Query query = raks::resolve_query(index.text, q.central, q.marginal);
    total += raks::search(input, query, params).results.size();
  }
  std::cout << "results " << total << '\n';
  return 0;
}
