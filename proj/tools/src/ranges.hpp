#pragma once

#include <string>
#include <vector>

namespace bpl::cli {

// Parse a grid specification into an ascending value list.
//   "A"      -> {A}
//   "A:B"    -> {A, A+1, ..., B}
//   "A:B:S"  -> {A, A+S, ...}; B included when hit exactly
//   "a,b,c"  -> the listed values verbatim
// Throws ConfigError on malformed text, step < 1, A > B, or an empty result.
std::vector<int> parse_int_values(const std::string& text);

}  // namespace bpl::cli
