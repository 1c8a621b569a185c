#include "twodfa/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace twodfa {

namespace {

std::vector<int> to_indices(const TwoDFA& a, const std::vector<std::string>& tokens) {
    std::vector<int> indices;
    indices.reserve(tokens.size());
    for (const std::string& tok : tokens) {
        int sym = a.symbol_index(tok);
        if (sym < 0 || sym >= static_cast<int>(a.alphabet.size()))
            throw std::invalid_argument("token '" + tok + "' not in alphabet");
        indices.push_back(sym);
    }
    return indices;
}

}  // namespace

RunOutcome run_full(const TwoDFA& a, const std::vector<std::string>& w, bool capture_trace) {
    ensure_valid(a);
    const std::vector<int> tape = to_indices(a, w);
    const int m = static_cast<int>(tape.size());
    const long step_bound = static_cast<long>(a.states) * (m + 2);

    RunOutcome outcome;
    std::vector<bool> visited(static_cast<std::size_t>(a.states) * (m + 2), false);
    auto visit = [&](State q, int pos) -> bool {
        std::size_t slot = static_cast<std::size_t>(q - 1) * (m + 2) + pos;
        if (visited[slot]) return false;
        visited[slot] = true;
        return true;
    };

    State q = a.initial;
    int pos = 0;
    visit(q, pos);
    if (capture_trace) outcome.trace.push_back({q, pos});

    while (true) {
        if (pos == m + 1 && a.is_accepting(q)) {
            outcome.kind = RunKind::Accept;
            return outcome;
        }
        int sym = pos == 0 ? a.left_end_index() : pos == m + 1 ? a.right_end_index() : tape[pos - 1];
        const auto& t = a.cell(q, sym);
        if (!t) {
            outcome.kind = RunKind::Reject;
            outcome.rejected_at = Configuration{q, pos};
            return outcome;
        }
        int next_pos = pos + (t->move == Direction::Right ? 1 : -1);
        if (next_pos < 0 || next_pos > m + 1) {
            // Off-tape move; the constructions never define one, and the
            // conservative completion of the semantics is to reject.
            outcome.kind = RunKind::Reject;
            outcome.rejected_at = Configuration{q, pos};
            return outcome;
        }
        q = t->target;
        pos = next_pos;
        ++outcome.steps;
        if (!visit(q, pos) || outcome.steps > step_bound) {
            outcome.kind = RunKind::Loop;
            return outcome;
        }
        if (capture_trace) outcome.trace.push_back({q, pos});
    }
}

SegmentOutcome run_segment(const TwoDFA& a, const std::vector<std::string>& u,
                           int start_pos, State start_state) {
    ensure_valid(a);
    if (u.empty()) throw std::invalid_argument("run_segment: segment must be non-empty");
    const std::vector<int> tape = to_indices(a, u);
    const int m = static_cast<int>(tape.size());
    if (start_pos < 1 || start_pos > m)
        throw std::invalid_argument("run_segment: start position " + std::to_string(start_pos) +
                                    " out of range 1.." + std::to_string(m));
    if (start_state < 1 || start_state > a.states)
        throw std::invalid_argument("run_segment: start state out of range");

    SegmentOutcome outcome;
    std::vector<bool> visited(static_cast<std::size_t>(a.states) * m, false);
    auto visit = [&](State q, int pos) -> bool {
        std::size_t slot = static_cast<std::size_t>(q - 1) * m + (pos - 1);
        if (visited[slot]) return false;
        visited[slot] = true;
        return true;
    };

    State q = start_state;
    int pos = start_pos;
    visit(q, pos);

    while (true) {
        const auto& t = a.cell(q, tape[pos - 1]);
        if (!t) {
            outcome.kind = SegmentKind::Reject;
            return outcome;
        }
        ++outcome.steps;
        q = t->target;
        pos += t->move == Direction::Right ? 1 : -1;
        if (pos == 0) {
            outcome.kind = SegmentKind::ExitLeft;
            outcome.exit_state = q;
            return outcome;
        }
        if (pos == m + 1) {
            outcome.kind = SegmentKind::ExitRight;
            outcome.exit_state = q;
            return outcome;
        }
        if (!visit(q, pos)) {
            outcome.kind = SegmentKind::Loop;
            return outcome;
        }
    }
}

std::string render_trace(const std::vector<std::string>& w,
                         const std::vector<Configuration>& trace) {
    if (trace.empty()) return "";

    std::vector<std::string> cells;
    cells.reserve(w.size() + 2);
    cells.emplace_back("|-");
    cells.insert(cells.end(), w.begin(), w.end());
    cells.emplace_back("-|");

    State max_state = 1;
    for (const Configuration& c : trace) max_state = std::max(max_state, c.state);
    std::size_t state_width = std::to_string(max_state).size();

    std::vector<std::size_t> widths;
    widths.reserve(cells.size());
    for (const std::string& cell : cells) widths.push_back(std::max(cell.size(), state_width));

    std::string out;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j > 0) out += ' ';
        out += std::string(widths[j] - cells[j].size(), ' ') + cells[j];
    }
    out += '\n';

    for (const Configuration& c : trace) {
        std::string row;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) row += ' ';
            if (static_cast<int>(j) == c.position) {
                std::string id = std::to_string(c.state);
                row += std::string(widths[j] - id.size(), ' ') + id;
            } else {
                row += std::string(widths[j], ' ');
            }
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + '\n';
    }
    return out;
}

}  // namespace twodfa
