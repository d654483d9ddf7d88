#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "raks/index_io.hpp"
#include "raks/search.hpp"

namespace raks::cli {

struct QueryEcho {
  std::vector<std::string> central;
  std::vector<std::string> marginal;
  SearchParams params;
  double alpha = 0.5;
};

nlohmann::json result_document(const SearchIndex& index, const QueryEcho& echo,
                               const SearchOutput& output);

// Document for a query that could not run.
nlohmann::json error_document(const QueryEcho& echo, const std::vector<std::string>& errors);

// One digraph per result.
std::string to_dot(const SearchIndex& index, const std::vector<SearchResult>& results);

std::string to_text(const SearchIndex& index, const QueryEcho& echo, const SearchOutput& output);

const char* to_string(Combination c);
const char* to_string(Termination t);

}  // namespace raks::cli
