#include "twodfa/util.hpp"

#include <cctype>
#include <stdexcept>

namespace twodfa {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t numerator = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t next = result * numerator;
        if (numerator != 0 && next / numerator != result)
            throw std::overflow_error("binomial: 64-bit overflow");
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace twodfa
