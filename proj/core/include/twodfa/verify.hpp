#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twodfa/automaton.hpp"

namespace twodfa {

struct VerifyRow {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool overall = true;
};

enum class VerifyScope { DirDet, General, All };

struct VerifyLimits {
    int max_kl = 7;  // direction-determinate families with k+l up to here
    int max_n = 6;   // doubling-family levels up to here
};

// Re-derives every checkable claim about the two families within the
// limits: exact shortest strings against the closed-form lengths, the
// direction partitions, the pair counts, the segment exit property of the
// doubling family, and the brute-force minimality checks at small sizes.
// Throws std::invalid_argument when a limit exceeds the feasible range
// (max_kl <= 7, max_n <= 6).
VerifyReport run_verification(VerifyScope scope, VerifyLimits limits);

std::string render_verify_text(const VerifyReport& report);

// The small-n bounds table: for n = 2..n_max one row with
// C(n, floor(n/2)) - 1, 3*2^(n-2) - 1, the best searched length if one is
// known, and C(2n, n+1) - 1. Byte-stable text.
std::string bounds_table(int n_max, const std::map<int, int>& computed = {});

}  // namespace twodfa
