#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twodfa/dirdet_family.hpp"
#include "twodfa/shortest.hpp"
#include "twodfa/simulate.hpp"
#include "twodfa/util.hpp"

using namespace twodfa;

TEST_CASE("pair comparison follows the signature order") {
    PairPR first{{}, {1}};
    PairPR second{{2}, {1, 2}};
    PairPR row4{{2}, {1, 4}};
    PairPR row5{{1}, {1, 2}};

    CHECK(compare_pairs(first, second) == std::strong_ordering::less);  // prefix rule
    CHECK(compare_pairs(row4, row5) == std::strong_ordering::less);     // -2 < -1
    CHECK(compare_pairs(row5, row5) == std::strong_ordering::equal);
    CHECK(compare_pairs(second, first) == std::strong_ordering::greater);
}

TEST_CASE("pair enumeration for k=4, l=2 lists all twenty pairs in order") {
    std::vector<PairPR> pairs = enumerate_pairs({4, 2});
    REQUIRE(pairs.size() == 20);

    std::vector<PairPR> expected{
        {{}, {1}},        {{2}, {1, 2}},    {{2}, {1, 3}},       {{2}, {1, 4}},
        {{1}, {1, 2}},    {{1, 2}, {1, 2, 3}}, {{1, 2}, {1, 2, 4}}, {{1}, {1, 3}},
        {{1, 2}, {1, 3, 4}}, {{1}, {1, 4}}, {{}, {2}},           {{2}, {2, 3}},
        {{2}, {2, 4}},    {{1}, {2, 3}},    {{1, 2}, {2, 3, 4}}, {{1}, {2, 4}},
        {{}, {3}},        {{2}, {3, 4}},    {{1}, {3, 4}},       {{}, {4}},
    };
    CHECK(pairs == expected);

    CHECK(format_pair(pairs[1]) == "{2'}, {1, 2}");
    CHECK(format_signature(pairs[1]) == "(1, -2', 2)");
    CHECK(format_pair(pairs[10]) == "{}, {2}");
    CHECK(format_signature(pairs[19]) == "(4)");
}

TEST_CASE("pair enumeration counts match the binomial") {
    SUBCASE("small explicit cases") {
        CHECK(enumerate_pairs({2, 0}).size() == 2);
        CHECK(enumerate_pairs({2, 1}).size() == 3);  // C(3, 2)
    }
    SUBCASE("all k+l up to 12") {
        for (int total = 2; total <= 12; ++total) {
            for (int l = 0; l + 2 <= total; ++l) {
                int k = total - l;
                CAPTURE(k);
                CAPTURE(l);
                CHECK(enumerate_pairs({k, l}).size() == binomial(k + l, l + 1));
            }
        }
    }
    SUBCASE("first and last pairs") {
        auto pairs = enumerate_pairs({5, 3});
        CHECK(pairs.front() == PairPR{{}, {1}});
        CHECK(pairs.back() == PairPR{{}, {5}});
    }
}

TEST_CASE("family construction basics") {
    SUBCASE("k=4, l=2") {
        FamilyWitness family = build_dirdet_automaton({4, 2});
        CHECK(family.expected_length == 19);  // C(6,3) - 1
        CHECK(family.witness.size() == 19);
        CHECK(family.automaton.states == 6);
        CHECK(family.automaton.initial == 1);
        CHECK(family.automaton.accepting == std::vector<State>{4});
        CHECK(family.automaton.aliases.at(5) == "1'");
        CHECK(family.automaton.aliases.at(6) == "2'");
        CHECK(family.partition.q_plus.size() == 4);
        CHECK(family.partition.q_minus.size() == 2);
    }
    SUBCASE("k=2, l=0 is the two-state chain") {
        FamilyWitness family = build_dirdet_automaton({2, 0});
        CHECK(family.expected_length == 1);
        CHECK(family.automaton.states == 2);
        CHECK(run_full(family.automaton, family.witness).kind == RunKind::Accept);
    }
    SUBCASE("the two splits of n=5 both reach length 9") {
        CHECK(build_dirdet_automaton({3, 2}).expected_length == 9);
        CHECK(build_dirdet_automaton({4, 1}).expected_length == 9);
    }
    SUBCASE("k must be at least 2") {
        CHECK_THROWS_AS(build_dirdet_automaton({1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(build_dirdet_automaton({2, -1}), std::invalid_argument);
    }
}

TEST_CASE("oracle returns exactly the witness for k+l up to 5") {
    for (int total = 2; total <= 5; ++total) {
        for (int l = 0; l + 2 <= total; ++l) {
            int k = total - l;
            CAPTURE(k);
            CAPTURE(l);
            FamilyWitness family = build_dirdet_automaton({k, l});
            ShortestResult result = shortest_accepted(family.automaton);
            REQUIRE(result.found);
            CHECK(result.length == family.expected_length);
            CHECK(result.tokens == family.witness);
        }
    }
}

TEST_CASE("no shorter string is accepted, brute force for k+l up to 4") {
    for (int total = 2; total <= 4; ++total) {
        for (int l = 0; l + 2 <= total; ++l) {
            int k = total - l;
            CAPTURE(k);
            CAPTURE(l);
            FamilyWitness family = build_dirdet_automaton({k, l});
            ShortestResult brute =
                brute_force_shortest(family.automaton, family.expected_length - 1);
            CHECK_FALSE(brute.found);
        }
    }
}

TEST_CASE("accepted strings start at a1, end at the last symbol, never skip") {
    // Full enumeration up to length N+1 for every k+l <= 4.
    for (int total = 2; total <= 4; ++total) {
        for (int l = 0; l + 2 <= total; ++l) {
            int k = total - l;
            FamilyWitness family = build_dirdet_automaton({k, l});
            const TwoDFA& a = family.automaton;
            const int s = static_cast<int>(a.alphabet.size());
            const int max_len = family.expected_length + 2;

            std::vector<int> word;
            std::vector<std::string> tokens;
            for (int length = 1; length <= max_len; ++length) {
                word.assign(length, 0);
                while (true) {
                    tokens.clear();
                    for (int sym : word) tokens.push_back(a.alphabet[sym]);
                    if (run_full(a, tokens).kind == RunKind::Accept) {
                        CAPTURE(join_tokens(tokens));
                        CHECK(word.front() == 0);
                        CHECK(word.back() == s - 1);
                        bool skips = false;
                        for (std::size_t i = 0; i + 1 < word.size(); ++i)
                            if (word[i + 1] > word[i] + 1) skips = true;
                        CHECK_FALSE(skips);
                        CHECK(static_cast<int>(word.size()) >= family.expected_length);
                    }
                    int at = length - 1;
                    while (at >= 0 && word[at] == s - 1) word[at--] = 0;
                    if (at < 0) break;
                    ++word[at];
                }
            }
        }
    }
}
