#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "twodfa/automaton.hpp"

namespace twodfa {

enum class SearchMode { Exhaustive, LocalSearch };

struct SearchConfig {
    int n = 2;
    int alphabet_size = 2;
    SearchMode mode = SearchMode::Exhaustive;
    long budget = 1'000'000;  // candidate-evaluation cap
    std::uint64_t seed = 1;
    std::optional<TwoDFA> warm_start;
};

struct SearchResult {
    TwoDFA best;
    int best_length = -1;  // -1: no candidate accepted anything
    long evaluated = 0;
    bool exhausted = false;  // the canonical space was fully enumerated
};

// Orbit key: the automaton serialized to a compact byte string, minimized
// over all alphabet permutations and all state permutations fixing the
// initial state. Two automata get equal keys iff they differ only by such
// a relabeling.
std::string canonical_form(const TwoDFA& a);

// Shared memo for candidate evaluation, keyed by canonical_form. Safe for
// concurrent lookup/insert; persists to a tab-separated file.
class EvalCache {
public:
    std::optional<int> lookup(const std::string& key) const;
    void insert(const std::string& key, int score);
    std::size_t size() const;

    void load(const std::string& path);   // merge; missing file is fine
    void save(const std::string& path) const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, int> entries_;
};

// shortest_accepted(a).length, or nullopt when the language is empty.
// Memoized through the cache when one is supplied.
std::optional<int> evaluate(const TwoDFA& a, EvalCache* cache = nullptr);

// Full enumeration of the n-state, s-symbol space: every partial transition
// table, every accepting set, initial state fixed to 1 (state permutations
// cover the rest), skipping non-canonical orbit representatives. Feasible
// only while n*(s+2) <= 12 table cells; throws std::invalid_argument beyond
// that. best_length is the exact maximum when exhausted.
SearchResult exhaustive_search(const SearchConfig& cfg, EvalCache* cache = nullptr);

// Random-restart hill climbing: one mutated cell (or an accepting-set
// toggle, or a new initial state) per step, moves accepted on
// non-decreasing score, restart from a fresh random automaton on
// stagnation. Deterministic for a fixed seed; the first climb starts from
// warm_start when given.
SearchResult local_search(const SearchConfig& cfg, EvalCache* cache = nullptr);

// Uniform random candidate over the fixed alphabet; used for restarts and
// by the randomized test suites.
TwoDFA random_automaton(std::mt19937_64& rng, int n, int s);

// "a", "b", ... - the alphabet used for searched automata.
std::vector<std::string> default_alphabet(int s);

}  // namespace twodfa
