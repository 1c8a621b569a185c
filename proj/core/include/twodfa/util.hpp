#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twodfa {

// C(n, k) in exact 64-bit arithmetic. Large enough for every table and
// bound this toolkit ever evaluates (n <= 34 or so); throws on overflow.
std::uint64_t binomial(int n, int k);

// Strings are exchanged as whitespace-separated token sequences; the empty
// sequence denotes the empty string.
std::vector<std::string> split_tokens(std::string_view text);
std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace twodfa
