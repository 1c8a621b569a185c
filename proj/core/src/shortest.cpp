#include "twodfa/shortest.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "twodfa/simulate.hpp"

namespace twodfa {

namespace {

// Exit-right state reached after entering the last prefix cell (holding
// symbol sym) in state enter, resolving every left move through the
// previous prefix behavior. 0 when the head never leaves to the right:
// an undefined cell, a bottomed-out left excursion, or a repeated re-entry
// state (the excursion is deterministic, so repetition proves a loop).
State chase(const TwoDFA& a, int sym, State enter, const State* cross) {
    State p = enter;
    for (int round = 0; round <= a.states; ++round) {
        const auto& t = a.cell(p, sym);
        if (!t) return 0;
        if (t->move == Direction::Right) return t->target;
        p = cross[t->target - 1];
        if (p == 0) return 0;
    }
    return 0;
}

bool accepts_with(const TwoDFA& a, State init, const State* cross) {
    State p = init;
    for (int round = 0; round <= a.states; ++round) {
        if (p == 0) return false;
        if (a.is_accepting(p)) return true;
        const auto& t = a.cell(p, a.right_end_index());
        if (!t || t->move == Direction::Right) return false;
        p = cross[t->target - 1];
    }
    return false;
}

}  // namespace

Behavior initial_behavior(const TwoDFA& a) {
    ensure_valid(a);
    Behavior b;
    b.cross.assign(a.states, 0);
    const int lend = a.left_end_index();
    for (State q = 1; q <= a.states; ++q) {
        const auto& t = a.cell(q, lend);
        if (t && t->move == Direction::Right) b.cross[q - 1] = t->target;
    }
    b.init = b.cross[a.initial - 1];
    return b;
}

Behavior extend_behavior(const TwoDFA& a, const Behavior& b, const std::string& symbol) {
    ensure_valid(a);
    int sym = a.symbol_index(symbol);
    if (sym < 0 || sym >= static_cast<int>(a.alphabet.size()))
        throw std::invalid_argument("symbol '" + symbol + "' not in alphabet");
    if (static_cast<int>(b.cross.size()) != a.states)
        throw std::invalid_argument("behavior does not match automaton state count");

    Behavior next;
    next.cross.assign(a.states, 0);
    for (State q = 1; q <= a.states; ++q)
        next.cross[q - 1] = chase(a, sym, q, b.cross.data());
    next.init = b.init == 0 ? 0 : next.cross[b.init - 1];
    return next;
}

bool accepts_here(const TwoDFA& a, const Behavior& b) {
    ensure_valid(a);
    if (static_cast<int>(b.cross.size()) != a.states)
        throw std::invalid_argument("behavior does not match automaton state count");
    return accepts_with(a, b.init, b.cross.data());
}

ShortestResult shortest_accepted(const TwoDFA& a) {
    ensure_valid(a);
    if (a.states > 255)
        throw std::invalid_argument("shortest_accepted: more than 255 states");

    const int n = a.states;
    const int alphabet_size = static_cast<int>(a.alphabet.size());

    // Behaviors are searched in their byte encoding [init, cross...]; short
    // encodings stay in the small-string buffer, so the hot loop does not
    // touch the heap.
    struct Node {
        std::string behavior;
        int parent = -1;
        int symbol = -1;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;

    auto encode_root = [&]() {
        Behavior b = initial_behavior(a);
        std::string enc(static_cast<std::size_t>(n) + 1, '\0');
        enc[0] = static_cast<char>(b.init);
        for (int i = 0; i < n; ++i) enc[i + 1] = static_cast<char>(b.cross[i]);
        return enc;
    };
    auto accepting_encoded = [&](const std::string& enc) {
        State init = static_cast<unsigned char>(enc[0]);
        std::vector<State> cross(n);
        for (int i = 0; i < n; ++i) cross[i] = static_cast<unsigned char>(enc[i + 1]);
        return accepts_with(a, init, cross.data());
    };

    auto build_result = [&](int goal) {
        ShortestResult result;
        result.found = true;
        result.explored = static_cast<long>(nodes.size());
        std::vector<std::string> tokens;
        for (int at = goal; nodes[at].parent >= 0; at = nodes[at].parent)
            tokens.push_back(a.alphabet[nodes[at].symbol]);
        std::reverse(tokens.begin(), tokens.end());
        result.length = static_cast<int>(tokens.size());
        result.tokens = std::move(tokens);
        return result;
    };

    nodes.push_back({encode_root(), -1, -1});
    seen.emplace(nodes[0].behavior, 0);
    if (accepting_encoded(nodes[0].behavior)) return build_result(0);

    std::vector<State> parent_cross(n);
    std::string candidate(static_cast<std::size_t>(n) + 1, '\0');

    // The nodes vector doubles as the FIFO frontier: children are appended
    // in alphabet order, so within each level candidates appear in
    // lexicographic order of their generating strings and the first
    // accepting behavior yields the alphabet-least shortest string.
    for (std::size_t cursor = 0; cursor < nodes.size(); ++cursor) {
        const State parent_init = static_cast<unsigned char>(nodes[cursor].behavior[0]);
        for (int i = 0; i < n; ++i)
            parent_cross[i] = static_cast<unsigned char>(nodes[cursor].behavior[i + 1]);

        for (int sym = 0; sym < alphabet_size; ++sym) {
            for (State q = 1; q <= n; ++q)
                candidate[q] = static_cast<char>(chase(a, sym, q, parent_cross.data()));
            candidate[0] = parent_init == 0 ? 0 : candidate[parent_init];

            auto [it, inserted] = seen.emplace(candidate, static_cast<int>(nodes.size()));
            if (!inserted) continue;
            nodes.push_back({candidate, static_cast<int>(cursor), sym});
            if (accepting_encoded(candidate)) return build_result(static_cast<int>(nodes.size()) - 1);
        }
    }

    ShortestResult result;
    result.explored = static_cast<long>(nodes.size());
    return result;
}

ShortestResult brute_force_shortest(const TwoDFA& a, int max_len) {
    ensure_valid(a);
    ShortestResult result;
    const int alphabet_size = static_cast<int>(a.alphabet.size());

    std::vector<int> word;
    std::vector<std::string> tokens;
    for (int length = 0; length <= max_len; ++length) {
        word.assign(length, 0);
        if (length > 0 && alphabet_size == 0) break;
        while (true) {
            tokens.clear();
            for (int sym : word) tokens.push_back(a.alphabet[sym]);
            ++result.explored;
            if (run_full(a, tokens).kind == RunKind::Accept) {
                result.found = true;
                result.length = length;
                result.tokens = tokens;
                return result;
            }
            int at = length - 1;
            while (at >= 0 && word[at] == alphabet_size - 1) word[at--] = 0;
            if (at < 0) break;
            ++word[at];
        }
    }
    return result;
}

}  // namespace twodfa
