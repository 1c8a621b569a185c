#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "twodfa/automaton.hpp"

namespace twodfa {

// Head position on the full tape: 0 is the left end-marker, |w|+1 the right
// end-marker, 1..|w| the input cells.
struct Configuration {
    State state = 0;
    int position = 0;
    auto operator<=>(const Configuration&) const = default;
};

enum class RunKind { Accept, Reject, Loop };

struct RunOutcome {
    RunKind kind = RunKind::Reject;
    std::optional<Configuration> rejected_at;  // set for Reject
    long steps = 0;                            // transitions executed
    std::vector<Configuration> trace;          // filled when capture_trace
};

// Runs the automaton on the tape LEND w REND from (initial, 0). Acceptance
// is checked the moment the head stands on the right end-marker in an
// accepting state, before the transition table is consulted there. An
// undefined transition or an off-tape move rejects; a repeated
// configuration (or exceeding n*(|w|+2) steps) is a loop.
RunOutcome run_full(const TwoDFA& a, const std::vector<std::string>& w, bool capture_trace = false);

enum class SegmentKind { ExitRight, ExitLeft, Reject, Loop };

struct SegmentOutcome {
    SegmentKind kind = SegmentKind::Reject;
    State exit_state = 0;  // state after crossing the boundary, for Exit*
    long steps = 0;
    bool operator==(const SegmentOutcome&) const = default;
};

// Runs on a bare segment u (positions 1..|u|, no end-markers) from
// (start_state, start_pos) until the head leaves the segment on either
// side. Exit outcomes report the state in which the boundary was crossed.
SegmentOutcome run_segment(const TwoDFA& a, const std::vector<std::string>& u,
                           int start_pos, State start_state);

// Text diagram of a computation: a header row with the tape cells, then one
// row per visited configuration with the state id in the head's column.
std::string render_trace(const std::vector<std::string>& w,
                         const std::vector<Configuration>& trace);

}  // namespace twodfa
