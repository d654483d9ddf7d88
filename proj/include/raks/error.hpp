#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace raks {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed line in an edge or node-text file.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class KeywordUnresolved : public Error {
 public:
  explicit KeywordUnresolved(std::string keyword);
  const std::string& keyword() const noexcept { return keyword_; }

 private:
  std::string keyword_;
};

// Bad magic, unsupported version, truncation or corrupt contents.
class IndexFormatError : public Error {
 public:
  using Error::Error;
};

// A query that cannot run; carries one message per problem (e.g. each unresolved keyword).
class QueryError : public Error {
 public:
  explicit QueryError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Internal consistency failure (e.g. an H cell with no recoverable predecessor).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace raks
