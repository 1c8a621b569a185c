#include "twodfa/verify.hpp"

#include <algorithm>
#include <sstream>

#include "twodfa/dirdet_family.hpp"
#include "twodfa/general_family.hpp"
#include "twodfa/shortest.hpp"
#include "twodfa/simulate.hpp"
#include "twodfa/util.hpp"

namespace twodfa {

namespace {

void add_row(VerifyReport& report, std::string description, std::string expected,
             std::string actual) {
    bool pass = expected == actual;
    report.overall = report.overall && pass;
    report.rows.push_back({std::move(description), std::move(expected), std::move(actual), pass});
}

std::string describe_length(const ShortestResult& r) {
    return r.found ? std::to_string(r.length) : "none";
}

// Every string the family automaton accepts, up to the given length, found
// by running the full tape on each candidate. Slow and only used at tiny
// sizes.
std::vector<std::vector<int>> accepted_up_to(const TwoDFA& a, int max_len) {
    std::vector<std::vector<int>> found;
    const int s = static_cast<int>(a.alphabet.size());
    std::vector<int> word;
    std::vector<std::string> tokens;
    for (int length = 0; length <= max_len; ++length) {
        if (length > 0 && s == 0) break;
        word.assign(length, 0);
        while (true) {
            tokens.clear();
            for (int sym : word) tokens.push_back(a.alphabet[sym]);
            if (run_full(a, tokens).kind == RunKind::Accept) found.push_back(word);
            int at = length - 1;
            while (at >= 0 && word[at] == s - 1) word[at--] = 0;
            if (at < 0) break;
            ++word[at];
        }
    }
    return found;
}

void verify_dirdet(VerifyReport& report, const VerifyLimits& limits) {
    // Construction-level pair counts; cheap independently of the limits.
    {
        std::string mismatch = "all match";
        for (int total = 2; total <= 12 && mismatch == "all match"; ++total) {
            for (int l = 0; l + 2 <= total; ++l) {
                int k = total - l;
                auto pairs = enumerate_pairs({k, l});
                if (pairs.size() != binomial(k + l, l + 1)) {
                    mismatch = "mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l);
                    break;
                }
            }
        }
        add_row(report, "pair counts equal C(k+l, l+1) for k+l <= 12", "all match", mismatch);
    }

    for (int total = 2; total <= limits.max_kl; ++total) {
        for (int l = 0; l + 2 <= total; ++l) {
            const int k = total - l;
            const std::string tag = "dirdet k=" + std::to_string(k) + " l=" + std::to_string(l);
            FamilyWitness family = build_dirdet_automaton({k, l});
            const int expected_length = family.expected_length;

            ShortestResult shortest = shortest_accepted(family.automaton);
            std::string expected = join_tokens(family.witness) + " (length " +
                                   std::to_string(expected_length) + ")";
            std::string actual = shortest.found
                                     ? join_tokens(shortest.tokens) + " (length " +
                                           std::to_string(shortest.length) + ")"
                                     : "no accepted string";
            add_row(report, tag + ": shortest accepted string", expected, actual);

            add_row(report, tag + ": direction partition sizes",
                    "(" + std::to_string(k) + ", " + std::to_string(l) + ")",
                    "(" + std::to_string(family.partition.q_plus.size()) + ", " +
                        std::to_string(family.partition.q_minus.size()) + ")");

            std::uint64_t bound = binomial(k + l, (k + l) / 2) - 1;
            add_row(report, tag + ": length within C(n, floor(n/2)) - 1 = " +
                                std::to_string(bound),
                    "within",
                    shortest.found && static_cast<std::uint64_t>(shortest.length) <= bound
                        ? "within"
                        : "violated");

            if (k + l <= 4) {
                const int alphabet_size = static_cast<int>(family.automaton.alphabet.size());
                auto accepted = accepted_up_to(family.automaton, expected_length + 2);
                bool begins = true, ends = true, no_skip = true, none_shorter = true;
                for (const auto& word : accepted) {
                    if (static_cast<int>(word.size()) < expected_length) none_shorter = false;
                    if (word.empty()) continue;
                    begins = begins && word.front() == 0;
                    ends = ends && word.back() == alphabet_size - 1;
                    for (std::size_t i = 0; i + 1 < word.size(); ++i)
                        if (word[i + 1] > word[i] + 1) no_skip = false;
                }
                std::string expected_props = "begin a1, end a" + std::to_string(alphabet_size) +
                                             ", no skipped index, none shorter";
                std::string actual_props;
                if (begins && ends && no_skip && none_shorter) {
                    actual_props = expected_props;
                } else {
                    actual_props = std::string(begins ? "" : "bad start; ") +
                                   (ends ? "" : "bad end; ") + (no_skip ? "" : "skip; ") +
                                   (none_shorter ? "" : "shorter accepted");
                }
                add_row(report,
                        tag + ": accepted strings up to length " +
                            std::to_string(expected_length + 2),
                        expected_props, actual_props);
            }
        }
    }
}

void verify_general(VerifyReport& report, const VerifyLimits& limits) {
    for (int n = 2; n <= 8; ++n) {
        CoreAutomaton core = build_core(n);
        long expected = 3L * (1L << (n - 2)) - 1;
        add_row(report, "general n=" + std::to_string(n) + ": |w_n| = |alphabet| = 3*2^(n-2)-1",
                std::to_string(expected) + ", " + std::to_string(expected),
                std::to_string(core.witness.size()) + ", " +
                    std::to_string(core.automaton.alphabet.size()));
    }

    for (int n = 2; n <= limits.max_n; ++n) {
        const std::string tag = "general n=" + std::to_string(n);
        CoreAutomaton core = build_core(n);
        const long expected_length = 3L * (1L << (n - 2)) - 1;

        int bad_positions = 0;
        for (int p = 1; p <= static_cast<int>(core.witness.size()); ++p) {
            SegmentOutcome out = run_segment(core.automaton, core.witness, p, n);
            if (!(out.kind == SegmentKind::ExitRight && out.exit_state == 1)) ++bad_positions;
        }
        add_row(report, tag + ": every start position on w_n exits right in state 1",
                "all " + std::to_string(core.witness.size()),
                bad_positions == 0 ? "all " + std::to_string(core.witness.size())
                                   : std::to_string(bad_positions) + " failures");

        TwoDFA wrapped = wrap(core);
        ShortestResult shortest = shortest_accepted(wrapped);
        add_row(report, tag + ": shortest accepted length", std::to_string(expected_length),
                describe_length(shortest));

        bool non_dirdet = std::holds_alternative<NotDirectionDeterminate>(
            classify_direction(wrapped));
        add_row(report, tag + ": wrapped automaton is not direction-determinate", "yes",
                non_dirdet ? "yes" : "no");

        if (n <= 3) {
            // Minimality of the segment property, by full enumeration of
            // shorter strings and start positions.
            const auto& alphabet = core.automaton.alphabet;
            const int s = static_cast<int>(alphabet.size());
            bool counterexample = false;
            std::vector<int> word;
            std::vector<std::string> tokens;
            for (int length = 1; length < static_cast<int>(core.witness.size()) && !counterexample;
                 ++length) {
                word.assign(length, 0);
                while (!counterexample) {
                    tokens.clear();
                    for (int sym : word) tokens.push_back(alphabet[sym]);
                    for (int p = 1; p <= length; ++p) {
                        SegmentOutcome out = run_segment(core.automaton, tokens, p, n);
                        if (out.kind == SegmentKind::ExitRight && out.exit_state == 1) {
                            counterexample = true;
                            break;
                        }
                    }
                    int at = length - 1;
                    while (at >= 0 && word[at] == s - 1) word[at--] = 0;
                    if (at < 0) break;
                    ++word[at];
                }
            }
            add_row(report, tag + ": no shorter string admits the exit-right-in-1 run", "none",
                    counterexample ? "counterexample found" : "none");
        }
    }
}

}  // namespace

VerifyReport run_verification(VerifyScope scope, VerifyLimits limits) {
    if (limits.max_kl < 2 || limits.max_kl > 7)
        throw std::invalid_argument("verify: k+l limit must lie in 2..7");
    if (limits.max_n < 2 || limits.max_n > 6)
        throw std::invalid_argument("verify: n limit must lie in 2..6");

    VerifyReport report;
    if (scope == VerifyScope::DirDet || scope == VerifyScope::All) verify_dirdet(report, limits);
    if (scope == VerifyScope::General || scope == VerifyScope::All) verify_general(report, limits);
    return report;
}

std::string render_verify_text(const VerifyReport& report) {
    std::size_t width = 0;
    for (const VerifyRow& row : report.rows) width = std::max(width, row.description.size());

    std::ostringstream out;
    for (const VerifyRow& row : report.rows) {
        out << (row.pass ? "PASS  " : "FAIL  ") << row.description
            << std::string(width - row.description.size(), ' ') << "  expected: " << row.expected;
        if (!row.pass) out << "  actual: " << row.actual;
        out << '\n';
    }
    out << (report.overall ? "overall: PASS" : "overall: FAIL") << '\n';
    return out.str();
}

std::string bounds_table(int n_max, const std::map<int, int>& computed) {
    std::ostringstream out;
    out << "  n | direction-determinate | general lower bound | searched | general upper bound\n";
    out << "----+-----------------------+---------------------+----------+--------------------\n";
    for (int n = 2; n <= n_max; ++n) {
        std::uint64_t dirdet = binomial(n, n / 2) - 1;
        long lower = 3L * (1L << (n - 2)) - 1;
        std::uint64_t upper = binomial(2 * n, n + 1) - 1;
        std::string searched;
        if (auto it = computed.find(n); it != computed.end()) searched = std::to_string(it->second);

        std::ostringstream line;
        line.width(3);
        line << n;
        out << line.str() << " | ";
        std::string col = std::to_string(dirdet);
        out << std::string(21 - col.size(), ' ') << col << " | ";
        col = std::to_string(lower);
        out << std::string(19 - col.size(), ' ') << col << " | ";
        out << std::string(8 - searched.size(), ' ') << searched << " | ";
        col = std::to_string(upper);
        out << std::string(20 - col.size(), ' ') << col << '\n';
    }
    return out.str();
}

}  // namespace twodfa
