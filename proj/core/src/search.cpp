#include "twodfa/search.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "twodfa/shortest.hpp"

namespace twodfa {

namespace {

// Cell values for enumeration and mutation: 0 is an undefined cell, value
// v >= 1 encodes target (v-1)/2 + 1 with direction Left for even v-1,
// Right for odd.
int cell_value(const std::optional<Transition>& t) {
    if (!t) return 0;
    return 2 * (t->target - 1) + (t->move == Direction::Right ? 1 : 0) + 1;
}

std::optional<Transition> value_cell(int v) {
    if (v == 0) return std::nullopt;
    return Transition{(v - 1) / 2 + 1, (v - 1) % 2 == 1 ? Direction::Right : Direction::Left};
}

void apply_cell(TwoDFA& a, State q, int sym, int v) {
    if (auto t = value_cell(v))
        a.set_cell(q, sym, *t);
    else
        a.clear_cell(q, sym);
}

// Serialization of one relabeling: [n][s][q0'] + accepting bytes + two
// bytes per cell in relabeled order (alphabet columns permuted, end-marker
// columns fixed).
void encode_relabeled(const TwoDFA& a, const std::vector<State>& state_map,
                      const std::vector<int>& symbol_map, std::string& out) {
    const int n = a.states;
    const int s = static_cast<int>(a.alphabet.size());
    out.clear();
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(s));
    out.push_back(static_cast<char>(state_map[a.initial - 1]));

    std::string accepting(static_cast<std::size_t>(n), '\0');
    for (State q : a.accepting) accepting[state_map[q - 1] - 1] = 1;
    out += accepting;

    std::string cells(static_cast<std::size_t>(n) * (s + 2) * 2, '\0');
    for (State q = 1; q <= n; ++q) {
        for (int sym = 0; sym < s + 2; ++sym) {
            const auto& t = a.cell(q, sym);
            if (!t) continue;
            int new_sym = sym < s ? symbol_map[sym] : sym;
            std::size_t slot =
                (static_cast<std::size_t>(state_map[q - 1] - 1) * (s + 2) + new_sym) * 2;
            cells[slot] = static_cast<char>(state_map[t->target - 1]);
            cells[slot + 1] = t->move == Direction::Right ? 2 : 1;
        }
    }
    out += cells;
}

int score_of(const std::optional<int>& value) { return value ? *value : -1; }

// Independent confirmation of a search result: at desk-scale lengths the
// plain enumeration oracle must reproduce the reported best exactly.
void reverify_best(const TwoDFA& best, int best_length) {
    if (best_length < 0 || best_length > 10) return;
    ShortestResult brute = brute_force_shortest(best, best_length);
    if (!brute.found || brute.length != best_length)
        throw std::logic_error("search result failed brute-force re-verification");
}

struct MutationSpace {
    int n = 0;
    int cells = 0;  // n * (s + 2)
};

void randomize(TwoDFA& a, std::mt19937_64& rng) {
    const int n = a.states;
    const int options = 2 * n + 1;
    for (State q = 1; q <= n; ++q)
        for (int sym = 0; sym < a.symbol_cells(); ++sym)
            apply_cell(a, q, sym, static_cast<int>(rng() % options));
    a.initial = 1 + static_cast<int>(rng() % n);
    a.accepting.clear();
    for (State q = 1; q <= n; ++q)
        if (rng() % 2 == 1) a.accepting.push_back(q);
}

void mutate(TwoDFA& a, std::mt19937_64& rng, const MutationSpace& space) {
    const int n = space.n;
    const int choice = static_cast<int>(rng() % (space.cells + n + 1));
    if (choice < space.cells) {
        State q = choice / a.symbol_cells() + 1;
        int sym = choice % a.symbol_cells();
        int cur = cell_value(a.cell(q, sym));
        int next = (cur + 1 + static_cast<int>(rng() % (2 * n))) % (2 * n + 1);
        apply_cell(a, q, sym, next);
    } else if (choice < space.cells + n) {
        State q = choice - space.cells + 1;
        a.set_accepting(q, !a.is_accepting(q));
    } else if (n > 1) {
        a.initial = 1 + (a.initial - 1 + 1 + static_cast<int>(rng() % (n - 1))) % n;
    }
}

}  // namespace

std::string canonical_form(const TwoDFA& a) {
    ensure_valid(a);
    const int n = a.states;
    const int s = static_cast<int>(a.alphabet.size());

    std::vector<State> state_map(n);
    std::iota(state_map.begin(), state_map.end(), 1);
    std::vector<int> symbol_map(s);
    std::iota(symbol_map.begin(), symbol_map.end(), 0);

    // Permutable state ids: everything except the fixed initial state.
    std::vector<State> movable;
    for (State q = 1; q <= n; ++q)
        if (q != a.initial) movable.push_back(q);

    std::string best, scratch;
    std::vector<State> movable_perm = movable;
    do {
        for (std::size_t i = 0; i < movable.size(); ++i) state_map[movable[i] - 1] = movable_perm[i];
        std::sort(symbol_map.begin(), symbol_map.end());
        do {
            encode_relabeled(a, state_map, symbol_map, scratch);
            if (best.empty() || scratch < best) best.swap(scratch);
        } while (std::next_permutation(symbol_map.begin(), symbol_map.end()));
    } while (std::next_permutation(movable_perm.begin(), movable_perm.end()));
    return best;
}

std::optional<int> EvalCache::lookup(const std::string& key) const {
    std::lock_guard<std::mutex> guard(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EvalCache::insert(const std::string& key, int score) {
    std::lock_guard<std::mutex> guard(mutex_);
    // Bounded so that long heuristic runs cannot exhaust memory; dropping
    // entries only costs recomputation.
    if (entries_.size() >= 4'000'000) return;
    entries_.emplace(key, score);
}

std::size_t EvalCache::size() const {
    std::lock_guard<std::mutex> guard(mutex_);
    return entries_.size();
}

namespace {

std::string to_hex(const std::string& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

std::optional<std::string> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) return std::nullopt;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<char>(hi * 16 + lo));
    }
    return out;
}

}  // namespace

void EvalCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string hex;
    int score = 0;
    while (in >> hex >> score) {
        if (auto key = from_hex(hex)) insert(*key, score);
    }
}

void EvalCache::save(const std::string& path) const {
    std::unordered_map<std::string, int> snapshot;
    {
        std::lock_guard<std::mutex> guard(mutex_);
        snapshot = entries_;
    }
    std::ofstream out(path, std::ios::trunc);
    for (const auto& [key, score] : snapshot) out << to_hex(key) << '\t' << score << '\n';
}

std::optional<int> evaluate(const TwoDFA& a, EvalCache* cache) {
    std::string key;
    if (cache) {
        key = canonical_form(a);
        if (auto hit = cache->lookup(key)) return *hit == -1 ? std::nullopt : std::optional<int>(*hit);
    }
    ShortestResult result = shortest_accepted(a);
    std::optional<int> score = result.found ? std::optional<int>(result.length) : std::nullopt;
    if (cache) cache->insert(key, score ? *score : -1);
    return score;
}

std::vector<std::string> default_alphabet(int s) {
    std::vector<std::string> alphabet;
    alphabet.reserve(s);
    for (int i = 0; i < s; ++i) {
        if (i < 26)
            alphabet.emplace_back(1, static_cast<char>('a' + i));
        else
            alphabet.push_back("s" + std::to_string(i));
    }
    return alphabet;
}

TwoDFA random_automaton(std::mt19937_64& rng, int n, int s) {
    TwoDFA a(n, default_alphabet(s), 1);
    randomize(a, rng);
    return a;
}

SearchResult exhaustive_search(const SearchConfig& cfg, EvalCache* cache) {
    const int n = cfg.n;
    const int s = cfg.alphabet_size;
    if (n < 1 || s < 1) throw std::invalid_argument("exhaustive_search: n and s must be positive");
    const int cells = n * (s + 2);
    if (cells > 12)
        throw std::invalid_argument("exhaustive_search: " + std::to_string(cells) +
                                    " table cells exceed the feasibility guard of 12");

    TwoDFA candidate(n, default_alphabet(s), 1);
    std::vector<int> odometer(cells, 0);
    const int options = 2 * n + 1;

    SearchResult result;
    result.exhausted = true;
    std::optional<TwoDFA> first_candidate;

    std::string identity_key, canonical_key;
    std::vector<State> identity_states(n);
    std::iota(identity_states.begin(), identity_states.end(), 1);
    std::vector<int> identity_symbols(s);
    std::iota(identity_symbols.begin(), identity_symbols.end(), 0);

    bool more_tables = true;
    while (more_tables) {
        for (std::uint32_t f_mask = 0; f_mask < (1u << n); ++f_mask) {
            candidate.accepting.clear();
            for (State q = 1; q <= n; ++q)
                if (f_mask & (1u << (q - 1))) candidate.accepting.push_back(q);

            if (result.evaluated >= cfg.budget) {
                result.exhausted = false;
                if (result.best_length < 0 && first_candidate) result.best = *first_candidate;
                reverify_best(result.best, result.best_length);
                return result;
            }
            encode_relabeled(candidate, identity_states, identity_symbols, identity_key);
            canonical_key = canonical_form(candidate);
            if (identity_key != canonical_key) continue;  // orbit duplicate

            if (!first_candidate) first_candidate = candidate;
            ++result.evaluated;
            int score = score_of(evaluate(candidate, cache));
            if (score > result.best_length) {
                result.best_length = score;
                result.best = candidate;
            }
        }

        more_tables = false;
        for (int at = cells - 1; at >= 0; --at) {
            if (odometer[at] + 1 < options) {
                ++odometer[at];
                apply_cell(candidate, at / (s + 2) + 1, at % (s + 2), odometer[at]);
                more_tables = true;
                break;
            }
            odometer[at] = 0;
            apply_cell(candidate, at / (s + 2) + 1, at % (s + 2), 0);
        }
    }

    if (result.best_length < 0 && first_candidate) result.best = *first_candidate;
    reverify_best(result.best, result.best_length);
    return result;
}

SearchResult local_search(const SearchConfig& cfg, EvalCache* cache) {
    if (cfg.n < 1 || cfg.alphabet_size < 1)
        throw std::invalid_argument("local_search: n and s must be positive");
    std::mt19937_64 rng(cfg.seed);

    // The search space adopts the warm start's alphabet, padded with fresh
    // letters up to the configured size.
    int n = cfg.n;
    std::vector<std::string> alphabet;
    if (cfg.warm_start) {
        ensure_valid(*cfg.warm_start);
        if (cfg.warm_start->states != cfg.n)
            throw std::invalid_argument("local_search: warm start has a different state count");
        alphabet = cfg.warm_start->alphabet;
        std::vector<std::string> pool =
            default_alphabet(cfg.alphabet_size + static_cast<int>(alphabet.size()));
        for (const std::string& fresh : pool) {
            if (static_cast<int>(alphabet.size()) >= cfg.alphabet_size) break;
            if (std::find(alphabet.begin(), alphabet.end(), fresh) == alphabet.end())
                alphabet.push_back(fresh);
        }
    } else {
        alphabet = default_alphabet(cfg.alphabet_size);
    }
    const int s = static_cast<int>(alphabet.size());
    MutationSpace space{n, n * (s + 2)};

    TwoDFA current(n, alphabet, 1);
    if (cfg.warm_start) {
        current = *cfg.warm_start;
        if (s > static_cast<int>(cfg.warm_start->alphabet.size())) {
            TwoDFA extended(n, alphabet, cfg.warm_start->initial);
            extended.accepting = cfg.warm_start->accepting;
            const int old_s = static_cast<int>(cfg.warm_start->alphabet.size());
            for (State q = 1; q <= n; ++q) {
                for (int sym = 0; sym < old_s; ++sym)
                    if (const auto& t = cfg.warm_start->cell(q, sym)) extended.set_cell(q, sym, *t);
                if (const auto& t = cfg.warm_start->cell(q, cfg.warm_start->left_end_index()))
                    extended.set_cell(q, extended.left_end_index(), *t);
                if (const auto& t = cfg.warm_start->cell(q, cfg.warm_start->right_end_index()))
                    extended.set_cell(q, extended.right_end_index(), *t);
            }
            current = std::move(extended);
        }
    } else {
        randomize(current, rng);
    }

    constexpr long kStagnationLimit = 2000;  // non-improving steps before a restart

    SearchResult result;
    auto evaluate_candidate = [&](const TwoDFA& a) {
        ++result.evaluated;
        return score_of(evaluate(a, cache));
    };

    int current_score = evaluate_candidate(current);
    result.best = current;
    result.best_length = current_score;
    long stagnation = 0;

    while (result.evaluated < cfg.budget) {
        TwoDFA proposal = current;
        mutate(proposal, rng, space);
        int proposal_score = evaluate_candidate(proposal);

        if (proposal_score > result.best_length) {
            result.best_length = proposal_score;
            result.best = proposal;
        }
        if (proposal_score > current_score) {
            stagnation = 0;
        } else {
            ++stagnation;
        }
        if (proposal_score >= current_score) {
            current = std::move(proposal);
            current_score = proposal_score;
        }
        if (stagnation >= kStagnationLimit && result.evaluated < cfg.budget) {
            randomize(current, rng);
            current_score = evaluate_candidate(current);
            if (current_score > result.best_length) {
                result.best_length = current_score;
                result.best = current;
            }
            stagnation = 0;
        }
    }

    reverify_best(result.best, result.best_length);
    return result;
}

}  // namespace twodfa
