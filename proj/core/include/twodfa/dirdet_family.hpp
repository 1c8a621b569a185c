#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twodfa/automaton.hpp"

namespace twodfa {

struct DirDetParams {
    int k = 2;  // |Q+|, states entered rightward; k >= 2
    int l = 0;  // |Q-|, states entered leftward; l >= 0
};

// A pair (P, R) with P a subset of Q- (prime indices 1..l), R a subset of
// Q+ (1..k) and |R| = |P| + 1. Such a pair describes the states visited
// while the automaton shuttles between two adjacent symbols.
struct PairPR {
    std::vector<int> p;  // strictly increasing, values 1..l
    std::vector<int> r;  // strictly increasing, values 1..k, size |p|+1

    // Interleaving r1, -p1, r2, -p2, ..., rm, -pm, r(m+1); Q- members are
    // negated so that larger prime indices compare smaller.
    std::vector<int> signature() const;

    bool operator==(const PairPR&) const = default;
};

// Lexicographic order on signatures, a proper prefix ordering before its
// extensions.
std::strong_ordering compare_pairs(const PairPR& x, const PairPR& y);

// All pairs over (k, l) in increasing compare_pairs order. The list has
// exactly C(k+l, l+1) entries, starting with ({}, {1}) and ending with
// ({}, {k}).
std::vector<PairPR> enumerate_pairs(DirDetParams params);

// Display helpers matching the pairs listing: "{1', 2'}, {1, 2, 3}" and
// "(1, -1', 2, -2', 3)".
std::string format_pair(const PairPR& pair);
std::string format_signature(const PairPR& pair);

// A constructed automaton together with the string realizing its claimed
// shortest accepted length.
struct FamilyWitness {
    TwoDFA automaton;
    std::vector<std::string> witness;
    int expected_length = 0;
    DirectionPartition partition;
};

// The direction-determinate automaton whose shortest accepted string is
// a1 a2 ... a(N-1) with N = C(k+l, l+1). States 1..k are Q+, ids k+1..k+l
// are the primed states 1'..l' of Q-; the single accepting state is k.
// Throws std::invalid_argument for k < 2 or l < 0.
FamilyWitness build_dirdet_automaton(DirDetParams params);

}  // namespace twodfa
