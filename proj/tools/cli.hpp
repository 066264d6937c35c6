#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oriray::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 malformed input/usage, 2 verification failure,
// 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oriray::cli
