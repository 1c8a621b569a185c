#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twodfa/general_family.hpp"
#include "twodfa/dirdet_family.hpp"
#include "twodfa/search.hpp"
#include "twodfa/shortest.hpp"
#include "twodfa/simulate.hpp"

using namespace twodfa;

namespace {

std::vector<std::string> tokens_of(const TwoDFA& a, const std::vector<int>& word) {
    std::vector<std::string> tokens;
    for (int sym : word) tokens.push_back(a.alphabet[sym]);
    return tokens;
}

}  // namespace

TEST_CASE("full run on the base acceptor") {
    TwoDFA a = wrap(build_core(2));

    SUBCASE("accepts a b with the expected zig-zag") {
        RunOutcome out = run_full(a, {"a", "b"}, true);
        REQUIRE(out.kind == RunKind::Accept);
        std::vector<Configuration> expected{{2, 0}, {2, 1}, {2, 2}, {1, 1}, {1, 2}, {1, 3}};
        CHECK(out.trace == expected);
        CHECK(out.steps == 5);
    }
    SUBCASE("rejects the empty string at the right end-marker") {
        RunOutcome out = run_full(a, {});
        REQUIRE(out.kind == RunKind::Reject);
        REQUIRE(out.rejected_at.has_value());
        CHECK(out.rejected_at->state == 2);
        CHECK(out.rejected_at->position == 1);
    }
    SUBCASE("unknown token is an error") {
        CHECK_THROWS_AS(run_full(a, {"c"}), std::invalid_argument);
    }
}

TEST_CASE("full run accepts the dirdet witness") {
    FamilyWitness family = build_dirdet_automaton({4, 2});
    CHECK(run_full(family.automaton, family.witness).kind == RunKind::Accept);
}

TEST_CASE("loop detection") {
    TwoDFA a(2, {"a"}, 1);
    a.set_cell(1, a.left_end_index(), {2, Direction::Right});
    a.set_cell(2, 0, {1, Direction::Left});
    a.set_cell(2, a.left_end_index(), {2, Direction::Right});
    a.accepting = {1};
    // LEND -> a -> LEND -> a -> ... revisits (2, 1).
    RunOutcome out = run_full(a, {"a"});
    CHECK(out.kind == RunKind::Loop);
}

TEST_CASE("segment runs on the base core") {
    CoreAutomaton core = build_core(2);
    const TwoDFA& a = core.automaton;

    SUBCASE("single symbols") {
        SegmentOutcome right = run_segment(a, {"a"}, 1, 2);
        CHECK(right == SegmentOutcome{SegmentKind::ExitRight, 2, 1});
        SegmentOutcome left = run_segment(a, {"b"}, 1, 2);
        CHECK(left == SegmentOutcome{SegmentKind::ExitLeft, 1, 1});
    }
    SUBCASE("both starting positions of w_2 exit right in state 1") {
        for (int p = 1; p <= 2; ++p) {
            SegmentOutcome out = run_segment(a, {"a", "b"}, p, 2);
            CHECK(out.kind == SegmentKind::ExitRight);
            CHECK(out.exit_state == 1);
        }
    }
    SUBCASE("argument checks") {
        CHECK_THROWS_AS(run_segment(a, {}, 1, 2), std::invalid_argument);
        CHECK_THROWS_AS(run_segment(a, {"a"}, 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(run_segment(a, {"a"}, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(run_segment(a, {"a"}, 1, 3), std::invalid_argument);
    }
    SUBCASE("undefined cell rejects") {
        TwoDFA b(1, {"a"}, 1);
        CHECK(run_segment(b, {"a"}, 1, 1).kind == SegmentKind::Reject);
    }
}

TEST_CASE("segment outcomes ignore cells beyond the segment") {
    // Anything other than an exit to the right never reads appended tokens.
    std::mt19937_64 rng(777001);
    int checked = 0;
    while (checked < 300) {
        int n = 1 + static_cast<int>(rng() % 3);
        int s = 1 + static_cast<int>(rng() % 2);
        TwoDFA a = random_automaton(rng, n, s);
        int len = 1 + static_cast<int>(rng() % 3);
        std::vector<int> word(len);
        for (int& sym : word) sym = static_cast<int>(rng() % s);
        std::vector<std::string> u = tokens_of(a, word);
        int start_pos = 1 + static_cast<int>(rng() % len);
        State start_state = 1 + static_cast<int>(rng() % n);

        SegmentOutcome base = run_segment(a, u, start_pos, start_state);
        if (base.kind == SegmentKind::ExitRight) continue;
        std::vector<std::string> extended = u;
        extended.push_back(a.alphabet[rng() % s]);
        CHECK(run_segment(a, extended, start_pos, start_state) == base);
        ++checked;
    }
}

TEST_CASE("full runs agree with the prefix-behavior acceptance check") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + static_cast<int>(rng() % 3);
        int s = 1 + static_cast<int>(rng() % 2);
        TwoDFA a = random_automaton(rng, n, s);
        int len = static_cast<int>(rng() % 5);
        std::vector<int> word(len);
        for (int& sym : word) sym = static_cast<int>(rng() % s);
        std::vector<std::string> w = tokens_of(a, word);

        Behavior b = initial_behavior(a);
        for (const std::string& tok : w) b = extend_behavior(a, b, tok);
        CAPTURE(i);
        CHECK(accepts_here(a, b) == (run_full(a, w).kind == RunKind::Accept));
    }
}

TEST_CASE("trace rendering") {
    TwoDFA a = wrap(build_core(2));

    SUBCASE("the base accepting computation") {
        RunOutcome out = run_full(a, {"a", "b"}, true);
        std::string expected =
            "|- a b -|\n"
            " 2\n"
            "   2\n"
            "     2\n"
            "   1\n"
            "     1\n"
            "        1\n";
        CHECK(render_trace({"a", "b"}, out.trace) == expected);
    }
    SUBCASE("empty trace renders nothing") {
        CHECK(render_trace({"a"}, {}) == "");
    }
    SUBCASE("dirdet witness trace renders one row per step") {
        FamilyWitness family = build_dirdet_automaton({2, 1});
        RunOutcome out = run_full(family.automaton, family.witness, true);
        REQUIRE(out.kind == RunKind::Accept);
        std::string text = render_trace(family.witness, out.trace);
        // header plus one row per configuration
        CHECK(std::count(text.begin(), text.end(), '\n') ==
              static_cast<long>(out.trace.size()) + 1);
    }
}
