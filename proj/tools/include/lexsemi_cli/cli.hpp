#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexsemi::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;  // not isomorphic / not equivalent / failures
inline constexpr int kError = 2;

// Runs one command. `args` excludes the program name. Term arguments name a
// file holding one term, or are the term text itself when no such file
// exists.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexsemi::cli
