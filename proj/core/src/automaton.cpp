#include "twodfa/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace twodfa {

namespace {

using ordered_json = nlohmann::ordered_json;

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string state_name(const TwoDFA& a, State q) {
    auto it = a.aliases.find(q);
    if (it != a.aliases.end()) return it->second + " (id " + std::to_string(q) + ")";
    return std::to_string(q);
}

}  // namespace

TwoDFA::TwoDFA(int state_count, std::vector<std::string> alphabet_tokens, State initial_state)
    : alphabet(std::move(alphabet_tokens)), states(state_count), initial(initial_state) {
    table_.resize(static_cast<std::size_t>(std::max(states, 0)) * symbol_cells());
}

int TwoDFA::symbol_index(std::string_view token) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == token) return static_cast<int>(i);
    if (token == kLeftEndToken) return left_end_index();
    if (token == kRightEndToken) return right_end_index();
    return -1;
}

const std::string& TwoDFA::symbol_token(int index) const {
    static const std::string lend{kLeftEndToken};
    static const std::string rend{kRightEndToken};
    if (index == left_end_index()) return lend;
    if (index == right_end_index()) return rend;
    return alphabet.at(static_cast<std::size_t>(index));
}

const std::optional<Transition>& TwoDFA::cell(State q, int symbol) const {
    return table_.at(static_cast<std::size_t>(q - 1) * symbol_cells() + symbol);
}

void TwoDFA::set_cell(State q, int symbol, Transition t) {
    table_.at(static_cast<std::size_t>(q - 1) * symbol_cells() + symbol) = t;
}

void TwoDFA::clear_cell(State q, int symbol) {
    table_.at(static_cast<std::size_t>(q - 1) * symbol_cells() + symbol).reset();
}

bool TwoDFA::is_accepting(State q) const {
    return std::binary_search(accepting.begin(), accepting.end(), q);
}

void TwoDFA::set_accepting(State q, bool member) {
    auto it = std::lower_bound(accepting.begin(), accepting.end(), q);
    bool present = it != accepting.end() && *it == q;
    if (member && !present) accepting.insert(it, q);
    if (!member && present) accepting.erase(it);
}

ValidationReport validate(const TwoDFA& a) {
    ValidationReport report;
    auto error = [&](std::string msg) { report.errors.push_back(std::move(msg)); };
    auto warn = [&](std::string msg) { report.warnings.push_back(std::move(msg)); };

    if (a.states < 1) error("state count must be positive, got " + std::to_string(a.states));
    if (a.initial < 1 || a.initial > a.states)
        error("initial state " + std::to_string(a.initial) + " out of range 1.." +
              std::to_string(a.states));

    for (State q : a.accepting)
        if (q < 1 || q > a.states)
            error("accepting state " + std::to_string(q) + " out of range");
    if (!std::is_sorted(a.accepting.begin(), a.accepting.end()) ||
        std::adjacent_find(a.accepting.begin(), a.accepting.end()) != a.accepting.end())
        error("accepting set must be sorted and duplicate-free");

    for (std::size_t i = 0; i < a.alphabet.size(); ++i) {
        const std::string& tok = a.alphabet[i];
        if (tok.empty()) error("alphabet token " + std::to_string(i) + " is empty");
        if (has_whitespace(tok)) error("alphabet token '" + tok + "' contains whitespace");
        if (tok == kLeftEndToken || tok == kRightEndToken)
            error("reserved end-marker token '" + tok + "' used in alphabet");
        for (std::size_t j = i + 1; j < a.alphabet.size(); ++j)
            if (a.alphabet[j] == tok) error("duplicate alphabet token '" + tok + "'");
    }

    for (const auto& [q, alias] : a.aliases)
        if (q < 1 || q > a.states)
            error("alias for state " + std::to_string(q) + " out of range");

    if (a.states >= 1) {
        for (State q = 1; q <= a.states; ++q) {
            for (int s = 0; s < a.symbol_cells(); ++s) {
                const auto& t = a.cell(q, s);
                if (!t) continue;
                if (t->target < 1 || t->target > a.states)
                    error("transition (" + std::to_string(q) + ", " + a.symbol_token(s) +
                          ") targets state " + std::to_string(t->target) + " out of range 1.." +
                          std::to_string(a.states));
                if (s == a.right_end_index() && t->move == Direction::Right)
                    warn("off-tape move: right move at REND in state " + state_name(a, q));
                if (s == a.left_end_index() && t->move == Direction::Left)
                    warn("off-tape move: left move at LEND in state " + state_name(a, q));
            }
        }
    }
    return report;
}

void ensure_valid(const TwoDFA& a) {
    ValidationReport report = validate(a);
    if (!report.ok()) throw std::invalid_argument("invalid automaton: " + report.errors.front());
}

std::variant<DirectionPartition, NotDirectionDeterminate> classify_direction(const TwoDFA& a) {
    std::vector<bool> entered_right(static_cast<std::size_t>(a.states) + 1, false);
    std::vector<bool> entered_left(static_cast<std::size_t>(a.states) + 1, false);
    for (State q = 1; q <= a.states; ++q) {
        for (int s = 0; s < a.symbol_cells(); ++s) {
            const auto& t = a.cell(q, s);
            if (!t) continue;
            (t->move == Direction::Right ? entered_right : entered_left)[t->target] = true;
        }
    }
    for (State q = 1; q <= a.states; ++q)
        if (entered_right[q] && entered_left[q]) return NotDirectionDeterminate{q};

    DirectionPartition partition;
    for (State q = 1; q <= a.states; ++q) {
        if (entered_right[q])
            partition.q_plus.push_back(q);
        else if (entered_left[q])
            partition.q_minus.push_back(q);
        else
            partition.unconstrained.push_back(q);
    }
    return partition;
}

namespace {

const ordered_json& require_field(const ordered_json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

int require_int(const ordered_json& value, const std::string& what) {
    if (!value.is_number_integer())
        throw ParseError(what + " must be an integer, got " + value.dump());
    auto wide = value.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
        throw ParseError(what + " out of range: " + value.dump());
    return static_cast<int>(wide);
}

}  // namespace

TwoDFA parse_automaton(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("malformed document: top level must be an object");

    static const char* known_keys[] = {"states", "initial",     "accepting",
                                       "alphabet", "transitions", "aliases"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (std::find_if(std::begin(known_keys), std::end(known_keys),
                         [&](const char* k) { return key == k; }) == std::end(known_keys))
            throw ParseError("unknown field '" + key + "'");
    }

    int states = require_int(require_field(doc, "states"), "'states'");
    State initial = require_int(require_field(doc, "initial"), "'initial'");

    const ordered_json& alphabet_doc = require_field(doc, "alphabet");
    if (!alphabet_doc.is_array()) throw ParseError("'alphabet' must be an array of tokens");
    std::vector<std::string> alphabet;
    for (const auto& tok : alphabet_doc) {
        if (!tok.is_string()) throw ParseError("alphabet entries must be strings");
        alphabet.push_back(tok.get<std::string>());
    }

    TwoDFA a(states, std::move(alphabet), initial);

    const ordered_json& accepting_doc = require_field(doc, "accepting");
    if (!accepting_doc.is_array()) throw ParseError("'accepting' must be an array of state ids");
    for (const auto& q : accepting_doc) a.accepting.push_back(require_int(q, "accepting state"));
    std::sort(a.accepting.begin(), a.accepting.end());
    a.accepting.erase(std::unique(a.accepting.begin(), a.accepting.end()), a.accepting.end());

    const ordered_json& transitions = require_field(doc, "transitions");
    if (!transitions.is_array()) throw ParseError("'transitions' must be an array");
    for (const auto& entry : transitions) {
        if (!entry.is_object()) throw ParseError("transition entries must be objects");
        State q = require_int(require_field(entry, "state"), "transition 'state'");
        State target = require_int(require_field(entry, "target"), "transition 'target'");
        const ordered_json& symbol_doc = require_field(entry, "symbol");
        const ordered_json& move_doc = require_field(entry, "move");
        if (!symbol_doc.is_string()) throw ParseError("transition 'symbol' must be a string");
        if (!move_doc.is_string() || (move_doc != "L" && move_doc != "R"))
            throw ParseError("transition 'move' must be \"L\" or \"R\"");
        std::string symbol = symbol_doc.get<std::string>();
        int sym = a.symbol_index(symbol);
        if (sym < 0) throw ParseError("transition symbol '" + symbol + "' not in alphabet");
        if (q < 1 || q > states)
            throw ParseError("transition state " + std::to_string(q) + " out of range 1.." +
                             std::to_string(states));
        if (a.cell(q, sym))
            throw ParseError("duplicate transition cell (" + std::to_string(q) + ", " + symbol +
                             ")");
        Direction move = move_doc == "R" ? Direction::Right : Direction::Left;
        a.set_cell(q, sym, Transition{target, move});
    }

    if (auto it = doc.find("aliases"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("'aliases' must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string()) throw ParseError("alias values must be strings");
            State q = 0;
            try {
                std::size_t used = 0;
                q = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("alias key '" + key + "' is not a state id");
            }
            a.aliases[q] = value.get<std::string>();
        }
    }

    ValidationReport report = validate(a);
    if (!report.ok()) throw ParseError("invalid automaton: " + report.errors.front());
    return a;
}

TwoDFA parse_automaton(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_automaton(std::string_view{buffer.str()});
}

std::string serialize_automaton(const TwoDFA& a) {
    ordered_json doc;
    doc["states"] = a.states;
    doc["initial"] = a.initial;
    doc["accepting"] = a.accepting;
    doc["alphabet"] = a.alphabet;

    ordered_json transitions = ordered_json::array();
    for (State q = 1; q <= a.states; ++q) {
        for (int s = 0; s < a.symbol_cells(); ++s) {
            const auto& t = a.cell(q, s);
            if (!t) continue;
            ordered_json entry;
            entry["state"] = q;
            entry["symbol"] = a.symbol_token(s);
            entry["target"] = t->target;
            entry["move"] = t->move == Direction::Right ? "R" : "L";
            transitions.push_back(std::move(entry));
        }
    }
    doc["transitions"] = std::move(transitions);

    if (!a.aliases.empty()) {
        ordered_json aliases;
        for (const auto& [q, alias] : a.aliases) aliases[std::to_string(q)] = alias;
        doc["aliases"] = std::move(aliases);
    }
    return doc.dump(2) + "\n";
}

}  // namespace twodfa
