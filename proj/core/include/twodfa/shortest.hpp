#pragma once

#include <string>
#include <vector>

#include "twodfa/automaton.hpp"

namespace twodfa {

// Summary of how the automaton traverses a tape prefix LEND u:
//   init     - the state in which the head first leaves the prefix to the
//              right when started from (initial, LEND); 0 if it never does.
//   cross[q] - the state in which the head first leaves to the right after
//              entering the prefix at its last cell in state q+1; 0 if never.
// 0 plays the role of a bottom value absorbing reject, loop and off-tape
// alike; acceptance can only happen at the right end-marker, which lies
// outside every prefix, so nothing is lost by the conflation.
struct Behavior {
    State init = 0;
    std::vector<State> cross;  // size n, indexed by state-1, entries 0..n
    bool operator==(const Behavior&) const = default;
};

// Behavior of the empty prefix (the left end-marker alone).
Behavior initial_behavior(const TwoDFA& a);

// Behavior of u.s given the behavior of u. The new cross chases the head
// through the old prefix: a left move hands control to b.cross, a repeated
// re-entry state proves a loop.
Behavior extend_behavior(const TwoDFA& a, const Behavior& b, const std::string& symbol);

// Whether a string with this prefix behavior is accepted: walk the arrival
// states at the right end-marker, accepting on the first one in F.
bool accepts_here(const TwoDFA& a, const Behavior& b);

struct ShortestResult {
    bool found = false;
    std::vector<std::string> tokens;  // a shortest accepted string, when found
    int length = -1;
    long explored = 0;  // distinct behaviors visited (strings run, for the
                        // brute-force variant)
};

// Exact shortest accepted string via breadth-first search over distinct
// prefix behaviors. Ties within the minimal length are broken toward the
// alphabet-least string, so results are reproducible. found = false means
// the language is empty.
ShortestResult shortest_accepted(const TwoDFA& a);

// Independent oracle: enumerate strings in length order (alphabet order
// within a length) and run each on the full tape. Checks lengths 0..max_len.
ShortestResult brute_force_shortest(const TwoDFA& a, int max_len);

}  // namespace twodfa
