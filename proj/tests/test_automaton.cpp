#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twodfa/automaton.hpp"
#include "twodfa/dirdet_family.hpp"
#include "twodfa/general_family.hpp"
#include "twodfa/search.hpp"
#include "twodfa/util.hpp"

using namespace twodfa;

namespace {

TwoDFA base_core_wrapped() {
    CoreAutomaton core = build_core(2);
    return wrap(core);
}

}  // namespace

TEST_CASE("binomial values") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(2, 1) == 2);
    CHECK(binomial(12, 7) == 792);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 9) == 0);
}

TEST_CASE("token splitting and joining") {
    CHECK(split_tokens("  a1  a2\n a3 ") == std::vector<std::string>{"a1", "a2", "a3"});
    CHECK(split_tokens("") == std::vector<std::string>{});
    CHECK(join_tokens({">a", "#", "<b"}) == ">a # <b");
    CHECK(join_tokens({}) == "");
}

TEST_CASE("parse the base-case document") {
    const char* doc = R"({
      "states": 2, "initial": 2, "accepting": [1],
      "alphabet": ["a", "b"],
      "transitions": [
        {"state": 2, "symbol": "a", "target": 2, "move": "R"},
        {"state": 2, "symbol": "b", "target": 1, "move": "L"},
        {"state": 1, "symbol": "a", "target": 1, "move": "R"},
        {"state": 1, "symbol": "b", "target": 1, "move": "R"},
        {"state": 2, "symbol": "LEND", "target": 2, "move": "R"}
      ]
    })";
    TwoDFA a = parse_automaton(doc);
    CHECK(a.states == 2);
    CHECK(a.alphabet == std::vector<std::string>{"a", "b"});
    CHECK(a.cell(2, 0) == Transition{2, Direction::Right});
    CHECK(a.cell(2, 1) == Transition{1, Direction::Left});
    CHECK(a.cell(1, a.left_end_index()) == std::nullopt);
    CHECK(a == base_core_wrapped());
}

TEST_CASE("parse accepts an automaton with no transitions") {
    TwoDFA a = parse_automaton(
        R"({"states": 1, "initial": 1, "accepting": [1], "alphabet": [], "transitions": []})");
    CHECK(a.states == 1);
    CHECK(validate(a).ok());
}

TEST_CASE("parse rejects bad documents") {
    CHECK_THROWS_AS(parse_automaton("{"), ParseError);
    CHECK_THROWS_AS(parse_automaton("[1, 2]"), ParseError);
    // reserved token in the alphabet
    CHECK_THROWS_AS(parse_automaton(R"({"states": 1, "initial": 1, "accepting": [],
        "alphabet": ["LEND"], "transitions": []})"),
                    ParseError);
    // duplicate transition cell
    CHECK_THROWS_AS(parse_automaton(R"({"states": 1, "initial": 1, "accepting": [],
        "alphabet": ["a"], "transitions": [
          {"state": 1, "symbol": "a", "target": 1, "move": "R"},
          {"state": 1, "symbol": "a", "target": 1, "move": "L"}]})"),
                    ParseError);
    // target out of range
    CHECK_THROWS_AS(parse_automaton(R"({"states": 3, "initial": 1, "accepting": [],
        "alphabet": ["a"], "transitions": [
          {"state": 1, "symbol": "a", "target": 5, "move": "R"}]})"),
                    ParseError);
    // unknown key
    CHECK_THROWS_AS(parse_automaton(R"({"states": 1, "initial": 1, "accepting": [],
        "alphabet": [], "transitions": [], "transtions": []})"),
                    ParseError);
}

TEST_CASE("validation reports") {
    SUBCASE("clean base automaton") {
        ValidationReport report = validate(base_core_wrapped());
        CHECK(report.ok());
        CHECK(report.warnings.empty());
    }
    SUBCASE("off-tape moves are warnings") {
        TwoDFA a(1, {"a"}, 1);
        a.set_cell(1, a.right_end_index(), {1, Direction::Right});
        ValidationReport report = validate(a);
        CHECK(report.ok());
        REQUIRE(report.warnings.size() == 1);
        CHECK(report.warnings[0].find("off-tape") != std::string::npos);
    }
    SUBCASE("target out of range is an error") {
        TwoDFA a(3, {"a"}, 1);
        a.set_cell(1, 0, {5, Direction::Right});
        CHECK_FALSE(validate(a).ok());
        CHECK_THROWS_AS(ensure_valid(a), std::invalid_argument);
    }
    SUBCASE("duplicate alphabet token is an error") {
        TwoDFA a(1, {"a", "a"}, 1);
        CHECK_FALSE(validate(a).ok());
    }
}

TEST_CASE("serialization is canonical and round-trips") {
    FamilyWitness family = build_dirdet_automaton({4, 2});
    std::string doc = serialize_automaton(family.automaton);
    CHECK(doc == serialize_automaton(family.automaton));
    TwoDFA reparsed = parse_automaton(doc);
    CHECK(reparsed == family.automaton);
    CHECK(serialize_automaton(reparsed) == doc);

    SUBCASE("unconstrained states survive") {
        TwoDFA a(3, {"a"}, 1);
        a.set_cell(1, 0, {1, Direction::Right});
        a.accepting = {2};
        TwoDFA b = parse_automaton(serialize_automaton(a));
        CHECK(b == a);
        CHECK(b.states == 3);
    }
}

TEST_CASE("round trip on random automata") {
    std::mt19937_64 rng(20250211);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        int s = 1 + static_cast<int>(rng() % 3);
        TwoDFA a = random_automaton(rng, n, s);
        CAPTURE(i);
        CHECK(parse_automaton(serialize_automaton(a)) == a);
    }
}

TEST_CASE("direction classification") {
    SUBCASE("dirdet family splits into (k, l)") {
        FamilyWitness family = build_dirdet_automaton({4, 2});
        auto result = classify_direction(family.automaton);
        REQUIRE(std::holds_alternative<DirectionPartition>(result));
        const auto& partition = std::get<DirectionPartition>(result);
        CHECK(partition.q_plus == std::vector<State>{1, 2, 3, 4});
        CHECK(partition.q_minus == std::vector<State>{5, 6});
        CHECK(partition.unconstrained.empty());
    }
    SUBCASE("the base core is not direction-determinate") {
        // State 1 is entered leftward at b and rightward at a.
        auto result = classify_direction(base_core_wrapped());
        REQUIRE(std::holds_alternative<NotDirectionDeterminate>(result));
        CHECK(std::get<NotDirectionDeterminate>(result).witness == 1);
    }
    SUBCASE("wrapped doubling automata stay non-direction-determinate") {
        for (int n = 2; n <= 6; ++n) {
            auto result = classify_direction(wrap(build_core(n)));
            CHECK(std::holds_alternative<NotDirectionDeterminate>(result));
        }
    }
    SUBCASE("no transitions leaves every state unconstrained") {
        TwoDFA a(3, {"a"}, 1);
        auto result = classify_direction(a);
        REQUIRE(std::holds_alternative<DirectionPartition>(result));
        CHECK(std::get<DirectionPartition>(result).unconstrained ==
              std::vector<State>{1, 2, 3});
    }
}
