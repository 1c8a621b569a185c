#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twodfa/automaton.hpp"

namespace twodfa {

// Token spelling in the doubled alphabets: ">x" marches right over x, "<x"
// marches left, "#" separates the two halves. Spellings nest: tokens like
// "><a" appear from n = 4 on.
struct ArrowToken {
    enum class Arrow { None, RightArrow, LeftArrow };
    Arrow arrow = Arrow::None;
    std::string base;  // empty for the separator "#"

    static ArrowToken parse(std::string_view token);
    std::string spell() const;
};

// The n-state core automaton of the doubling family: no end-marker
// transitions and no initial/accepting designation (the stored TwoDFA keeps
// initial = n and an empty accepting set). witness is the string w_n with
// |w_n| = |alphabet| = 3 * 2^(n-2) - 1.
struct CoreAutomaton {
    TwoDFA automaton;
    int n = 0;
    std::vector<std::string> witness;
};

// Base case n = 2 over {a, b}; each further level doubles the alphabet with
// ">"/"<" copies plus "#", lifts the previous transitions onto both copies,
// routes the new top state n+1 along the arrows, and joins the halves with
// the two "#" transitions. Throws std::invalid_argument for n < 2.
CoreAutomaton build_core(int n);

// Completes a core into an acceptor: initial state n, accepting set {1},
// and the single left end-marker transition from n to n moving right.
TwoDFA wrap(const CoreAutomaton& core);

// Per-token homomorphism dropping the leading arrow marker. Rejects the
// separator "#" (and any token without an arrow) with std::invalid_argument.
std::vector<std::string> strip_arrows(const std::vector<std::string>& w);

}  // namespace twodfa
