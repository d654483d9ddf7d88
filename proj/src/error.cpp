#include "raks/error.hpp"

#include <utility>

namespace raks {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid query";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    out += i == 0 ? ": " : "; ";
    out += problems[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

KeywordUnresolved::KeywordUnresolved(std::string keyword)
    : Error("keyword unresolved: '" + keyword + "'"), keyword_(std::move(keyword)) {}

QueryError::QueryError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

}  // namespace raks
