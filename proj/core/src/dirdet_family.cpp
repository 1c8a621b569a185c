#include "twodfa/dirdet_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "twodfa/util.hpp"

namespace twodfa {

std::vector<int> PairPR::signature() const {
    std::vector<int> seq;
    seq.reserve(p.size() + r.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        seq.push_back(r[j]);
        seq.push_back(-p[j]);
    }
    seq.push_back(r.back());
    return seq;
}

std::strong_ordering compare_pairs(const PairPR& x, const PairPR& y) {
    std::vector<int> sx = x.signature();
    std::vector<int> sy = y.signature();
    return std::lexicographical_compare_three_way(sx.begin(), sx.end(), sy.begin(), sy.end());
}

namespace {

void subsets_of_size(int universe, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (int v = next; v <= universe - (size - 1 - static_cast<int>(current.size())); ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
}

}  // namespace

std::vector<PairPR> enumerate_pairs(DirDetParams params) {
    if (params.k < 2) throw std::invalid_argument("enumerate_pairs: k must be at least 2");
    if (params.l < 0) throw std::invalid_argument("enumerate_pairs: l must be non-negative");

    std::vector<PairPR> pairs;
    for (int m = 0; m <= std::min(params.l, params.k - 1); ++m) {
        std::vector<std::vector<int>> ps, rs;
        subsets_of_size(params.l, m, ps);
        subsets_of_size(params.k, m + 1, rs);
        for (const auto& p : ps)
            for (const auto& r : rs) pairs.push_back(PairPR{p, r});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairPR& x, const PairPR& y) { return compare_pairs(x, y) < 0; });
    return pairs;
}

std::string format_pair(const PairPR& pair) {
    std::string out = "{";
    for (std::size_t j = 0; j < pair.p.size(); ++j) {
        if (j > 0) out += ", ";
        out += std::to_string(pair.p[j]) + "'";
    }
    out += "}, {";
    for (std::size_t j = 0; j < pair.r.size(); ++j) {
        if (j > 0) out += ", ";
        out += std::to_string(pair.r[j]);
    }
    out += "}";
    return out;
}

std::string format_signature(const PairPR& pair) {
    std::string out = "(";
    for (std::size_t j = 0; j < pair.p.size(); ++j) {
        out += std::to_string(pair.r[j]) + ", ";
        out += "-" + std::to_string(pair.p[j]) + "', ";
    }
    out += std::to_string(pair.r.back()) + ")";
    return out;
}

FamilyWitness build_dirdet_automaton(DirDetParams params) {
    const int k = params.k;
    const int l = params.l;
    std::vector<PairPR> pairs = enumerate_pairs(params);
    const int pair_count = static_cast<int>(pairs.size());

    std::vector<std::string> alphabet;
    alphabet.reserve(pair_count - 1);
    for (int i = 1; i < pair_count; ++i) alphabet.push_back("a" + std::to_string(i));

    TwoDFA a(k + l, alphabet, 1);
    for (int j = 1; j <= l; ++j) a.aliases[k + j] = std::to_string(j) + "'";
    a.accepting = {k};
    const auto prime_id = [k](int p) { return k + p; };

    // The single left end-marker transition enters the least state of the
    // first pair.
    a.set_cell(1, a.left_end_index(), Transition{pairs[0].r.front(), Direction::Right});

    // Transitions at symbol a_i are defined exactly in R(i) and P(i+1):
    // every non-greatest state of R(i) retreats into the matching state of
    // P(i), the greatest one advances into the least state of R(i+1), and
    // each state of P(i+1) re-advances into the next state of R(i+1).
    for (int i = 1; i < pair_count; ++i) {
        const PairPR& cur = pairs[i - 1];
        const PairPR& next = pairs[i];
        const int sym = i - 1;
        const int m_cur = static_cast<int>(cur.p.size());
        for (int j = 0; j < m_cur; ++j)
            a.set_cell(cur.r[j], sym, Transition{prime_id(cur.p[j]), Direction::Left});
        a.set_cell(cur.r[m_cur], sym, Transition{next.r.front(), Direction::Right});
        for (std::size_t j = 0; j < next.p.size(); ++j)
            a.set_cell(prime_id(next.p[j]), sym, Transition{next.r[j + 1], Direction::Right});
    }

    ensure_valid(a);

    FamilyWitness result;
    result.automaton = std::move(a);
    result.witness = alphabet;
    result.expected_length = pair_count - 1;
    auto classified = classify_direction(result.automaton);
    if (!std::holds_alternative<DirectionPartition>(classified))
        throw std::logic_error("constructed family automaton is not direction-determinate");
    result.partition = std::get<DirectionPartition>(classified);
    return result;
}

}  // namespace twodfa
