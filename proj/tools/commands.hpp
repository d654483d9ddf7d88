#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raks::cli {

// Exit codes of `query`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_no_results = 2;

// Entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raks::cli
