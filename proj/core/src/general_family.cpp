#include "twodfa/general_family.hpp"

#include <stdexcept>

namespace twodfa {

ArrowToken ArrowToken::parse(std::string_view token) {
    if (token == "#") return {Arrow::None, ""};
    if (token.size() >= 2 && token.front() == '>')
        return {Arrow::RightArrow, std::string(token.substr(1))};
    if (token.size() >= 2 && token.front() == '<')
        return {Arrow::LeftArrow, std::string(token.substr(1))};
    throw std::invalid_argument("token '" + std::string(token) + "' carries no arrow marker");
}

std::string ArrowToken::spell() const {
    switch (arrow) {
        case Arrow::RightArrow: return ">" + base;
        case Arrow::LeftArrow: return "<" + base;
        case Arrow::None: return "#";
    }
    return "#";
}

CoreAutomaton build_core(int n) {
    if (n < 2) throw std::invalid_argument("build_core: n must be at least 2");

    CoreAutomaton core;
    core.n = 2;
    core.automaton = TwoDFA(2, {"a", "b"}, 2);
    core.automaton.set_cell(2, 0, {2, Direction::Right});
    core.automaton.set_cell(2, 1, {1, Direction::Left});
    core.automaton.set_cell(1, 0, {1, Direction::Right});
    core.automaton.set_cell(1, 1, {1, Direction::Right});
    core.witness = {"a", "b"};

    while (core.n < n) {
        const TwoDFA& prev = core.automaton;
        const int prev_n = core.n;
        const int prev_size = static_cast<int>(prev.alphabet.size());

        std::vector<std::string> alphabet;
        alphabet.reserve(2 * prev_size + 1);
        for (const std::string& tok : prev.alphabet) alphabet.push_back(">" + tok);
        for (const std::string& tok : prev.alphabet) alphabet.push_back("<" + tok);
        alphabet.push_back("#");

        TwoDFA next(prev_n + 1, alphabet, prev_n + 1);
        const int hash_sym = 2 * prev_size;
        for (int s = 0; s < prev_size; ++s) {
            // The top state follows the arrows; the old states treat both
            // copies exactly as the previous level treated the bare symbol.
            next.set_cell(prev_n + 1, s, {prev_n + 1, Direction::Right});
            next.set_cell(prev_n + 1, prev_size + s, {prev_n + 1, Direction::Left});
            for (State q = 1; q <= prev_n; ++q) {
                const auto& t = prev.cell(q, s);
                if (!t) continue;
                next.set_cell(q, s, *t);
                next.set_cell(q, prev_size + s, *t);
            }
        }
        next.set_cell(prev_n + 1, hash_sym, {prev_n, Direction::Left});
        next.set_cell(1, hash_sym, {prev_n, Direction::Right});

        std::vector<std::string> witness;
        witness.reserve(2 * core.witness.size() + 1);
        for (const std::string& tok : core.witness) witness.push_back(">" + tok);
        witness.push_back("#");
        for (const std::string& tok : core.witness) witness.push_back("<" + tok);

        core.automaton = std::move(next);
        core.witness = std::move(witness);
        core.n = prev_n + 1;
    }

    ensure_valid(core.automaton);
    return core;
}

TwoDFA wrap(const CoreAutomaton& core) {
    TwoDFA a = core.automaton;
    a.initial = core.n;
    a.accepting = {1};
    a.set_cell(core.n, a.left_end_index(), {core.n, Direction::Right});
    ensure_valid(a);
    return a;
}

std::vector<std::string> strip_arrows(const std::vector<std::string>& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (const std::string& tok : w) {
        ArrowToken parsed = ArrowToken::parse(tok);
        if (parsed.arrow == ArrowToken::Arrow::None)
            throw std::invalid_argument("strip_arrows: separator '#' has no image");
        out.push_back(parsed.base);
    }
    return out;
}

}  // namespace twodfa
