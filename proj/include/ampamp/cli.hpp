#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ampamp/bounds.hpp"

namespace ampamp::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kValidationError = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3" or "1,5,7"
std::vector<std::size_t> parse_index_list(std::string_view text);

/// "default", or "a=<list>;phi=<list>" where list entries are reals / angles.
bounds::SweepSpec parse_grid(std::string_view text, bounds::Check check);

/// %.17g
std::string format_double(double value);

}  // namespace ampamp::cli
