#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twodfa {

// State ids are 1..n. 0 is never a valid state and is used as a sentinel
// by the behavior summaries in shortest.hpp.
using State = int;

enum class Direction : std::uint8_t { Left, Right };

// Reserved spellings for the end-markers in documents and token streams.
// They are not part of any alphabet.
inline constexpr std::string_view kLeftEndToken = "LEND";
inline constexpr std::string_view kRightEndToken = "REND";

struct Transition {
    State target = 0;
    Direction move = Direction::Right;
    bool operator==(const Transition&) const = default;
};

// A two-way deterministic finite automaton: an ordered alphabet, states
// 1..n, an initial state, a set of accepting states (effective only at the
// right end-marker) and a partial transition table over the alphabet plus
// the two end-markers.
//
// Values are plain data and are meant to be immutable once built; every
// operation in this library takes them by const reference and is pure.
struct TwoDFA {
    std::vector<std::string> alphabet;
    int states = 0;
    State initial = 1;
    std::vector<State> accepting;              // sorted, unique
    std::map<State, std::string> aliases;      // optional display names

    TwoDFA() = default;
    TwoDFA(int state_count, std::vector<std::string> alphabet_tokens, State initial_state);

    // Symbol cells are indexed 0..|alphabet|-1, then left end-marker, then
    // right end-marker.
    int symbol_cells() const { return static_cast<int>(alphabet.size()) + 2; }
    int left_end_index() const { return static_cast<int>(alphabet.size()); }
    int right_end_index() const { return static_cast<int>(alphabet.size()) + 1; }

    // Index of a token, including the reserved end-marker spellings;
    // -1 if the token names nothing.
    int symbol_index(std::string_view token) const;
    const std::string& symbol_token(int index) const;

    const std::optional<Transition>& cell(State q, int symbol_index) const;
    void set_cell(State q, int symbol_index, Transition t);
    void clear_cell(State q, int symbol_index);

    bool is_accepting(State q) const;
    void set_accepting(State q, bool member);

    bool operator==(const TwoDFA&) const = default;

private:
    std::vector<std::optional<Transition>> table_;  // states * symbol_cells()
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// Structural checks: state ids in range, alphabet tokens distinct, non-empty,
// whitespace-free and not a reserved end-marker spelling. Off-tape moves
// (a right move at the right end-marker, a left move at the left one) are
// reported as warnings; the simulator treats executing one as a reject.
ValidationReport validate(const TwoDFA& a);

// Throws std::invalid_argument when validate(a) reports errors.
void ensure_valid(const TwoDFA& a);

struct DirectionPartition {
    std::vector<State> q_plus;          // targets of rightward moves only
    std::vector<State> q_minus;         // targets of leftward moves only
    std::vector<State> unconstrained;   // never targeted by any transition
};

struct NotDirectionDeterminate {
    State witness = 0;  // a state entered both leftward and rightward
};

// Splits the states by the direction of the transitions entering them, or
// reports one state that is entered in both directions. States that are
// never targeted do not block the classification.
std::variant<DirectionPartition, NotDirectionDeterminate> classify_direction(const TwoDFA& a);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads the JSON document format described in the README. The returned
// automaton always passes validate() with no errors; anything else throws
// ParseError (malformed document, duplicate transition cell, reserved token
// in the alphabet, ...).
TwoDFA parse_automaton(std::string_view text);
TwoDFA parse_automaton(std::istream& in);

// Canonical document: keys in fixed order, transitions listed by state
// ascending and symbol in alphabet order followed by LEND, REND. Output is
// byte-stable and parses back to an equal automaton.
std::string serialize_automaton(const TwoDFA& a);

}  // namespace twodfa
