// Command-line front end: generation of the two automaton families,
// simulation with trace rendering, exact shortest accepted strings, the
// extremal-automaton searches, the self-verification suite and the small-n
// bounds table.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twodfa/automaton.hpp"
#include "twodfa/dirdet_family.hpp"
#include "twodfa/general_family.hpp"
#include "twodfa/search.hpp"
#include "twodfa/shortest.hpp"
#include "twodfa/simulate.hpp"
#include "twodfa/util.hpp"
#include "twodfa/verify.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

twodfa::TwoDFA read_automaton(const std::string& path) {
    if (path.empty() || path == "-") return twodfa::parse_automaton(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open automaton file '" + path + "'");
    return twodfa::parse_automaton(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << content;
}

ordered_json witness_sidecar(const std::vector<std::string>& witness, int expected_length) {
    ordered_json doc;
    doc["witness"] = twodfa::join_tokens(witness);
    doc["expected_length"] = expected_length;
    return doc;
}

void emit_generated(const twodfa::TwoDFA& automaton, const ordered_json& sidecar,
                    const std::string& out_path, std::string sidecar_path) {
    std::string document = twodfa::serialize_automaton(automaton);
    if (out_path.empty()) {
        std::cout << document;
    } else {
        write_file(out_path, document);
        if (sidecar_path.empty()) sidecar_path = out_path + ".witness.json";
    }
    if (!sidecar_path.empty()) write_file(sidecar_path, sidecar.dump(2) + "\n");
}

ordered_json automaton_to_json(const twodfa::TwoDFA& a) {
    return ordered_json::parse(twodfa::serialize_automaton(a));
}

int cmd_pairs(int k, int l, const std::string& format) {
    auto pairs = twodfa::enumerate_pairs({k, l});
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& pair : pairs) {
            ordered_json row;
            row["p"] = pair.p;
            row["r"] = pair.r;
            row["signature"] = pair.signature();
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
        return kExitOk;
    }
    std::size_t width = 0;
    for (const auto& pair : pairs) width = std::max(width, twodfa::format_pair(pair).size());
    for (const auto& pair : pairs) {
        std::string left = twodfa::format_pair(pair);
        std::cout << left << std::string(width - left.size(), ' ') << "  "
                  << twodfa::format_signature(pair) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const std::string& automaton_path, const std::string& input, bool trace,
                 bool segment, int start_pos, int start_state, const std::string& format) {
    twodfa::TwoDFA a = read_automaton(automaton_path);
    std::vector<std::string> tokens = twodfa::split_tokens(input);

    if (segment) {
        twodfa::SegmentOutcome out = twodfa::run_segment(a, tokens, start_pos, start_state);
        std::string kind;
        switch (out.kind) {
            case twodfa::SegmentKind::ExitRight: kind = "exit-right"; break;
            case twodfa::SegmentKind::ExitLeft: kind = "exit-left"; break;
            case twodfa::SegmentKind::Reject: kind = "reject"; break;
            case twodfa::SegmentKind::Loop: kind = "loop"; break;
        }
        if (format == "json") {
            ordered_json doc;
            doc["outcome"] = kind;
            if (out.kind == twodfa::SegmentKind::ExitRight ||
                out.kind == twodfa::SegmentKind::ExitLeft)
                doc["state"] = out.exit_state;
            doc["steps"] = out.steps;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "outcome: " << kind;
            if (out.exit_state != 0) std::cout << " in state " << out.exit_state;
            std::cout << "\nsteps: " << out.steps << "\n";
        }
        return kExitOk;
    }

    twodfa::RunOutcome out = twodfa::run_full(a, tokens, trace);
    std::string kind = out.kind == twodfa::RunKind::Accept   ? "accept"
                       : out.kind == twodfa::RunKind::Reject ? "reject"
                                                             : "loop";
    if (format == "json") {
        ordered_json doc;
        doc["outcome"] = kind;
        doc["steps"] = out.steps;
        if (out.rejected_at) {
            doc["rejected_at"] = {{"state", out.rejected_at->state},
                                  {"position", out.rejected_at->position}};
        }
        if (trace) {
            ordered_json steps = ordered_json::array();
            for (const auto& c : out.trace) steps.push_back({c.state, c.position});
            doc["trace"] = std::move(steps);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "outcome: " << kind << "\n";
        if (out.rejected_at)
            std::cout << "rejected at: state " << out.rejected_at->state << ", position "
                      << out.rejected_at->position << "\n";
        std::cout << "steps: " << out.steps << "\n";
        if (trace) std::cout << twodfa::render_trace(tokens, out.trace);
    }
    return kExitOk;
}

int cmd_shortest(const std::string& automaton_path, const std::string& method, int max_len,
                 const std::string& format) {
    twodfa::TwoDFA a = read_automaton(automaton_path);
    twodfa::ShortestResult result = method == "brute" ? twodfa::brute_force_shortest(a, max_len)
                                                      : twodfa::shortest_accepted(a);
    if (format == "json") {
        ordered_json doc;
        doc["found"] = result.found;
        if (result.found) {
            doc["length"] = result.length;
            doc["string"] = twodfa::join_tokens(result.tokens);
        }
        doc["explored"] = result.explored;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (result.found) {
            std::cout << "length: " << result.length << "\n"
                      << "string: " << twodfa::join_tokens(result.tokens) << "\n";
        } else {
            std::cout << "length: none\n";
        }
        std::cout << "explored: " << result.explored << "\n";
    }
    return kExitOk;
}

std::map<int, int> read_search_log(const std::string& cache_dir) {
    std::map<int, int> best;
    std::ifstream in(cache_dir + "/search-log.jsonl");
    if (!in) return best;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json entry = json::parse(line);
            int n = entry.at("config").at("n").get<int>();
            int length = entry.at("best_length").get<int>();
            auto it = best.find(n);
            if (length >= 0 && (it == best.end() || length > it->second)) best[n] = length;
        } catch (const json::exception&) {
            continue;  // skip foreign lines
        }
    }
    return best;
}

int cmd_search(int n, int s, const std::string& mode, long budget, std::uint64_t seed,
               const std::string& warm_start_path, const std::string& cache_dir,
               const std::string& log_path, const std::string& format) {
    twodfa::SearchConfig cfg;
    cfg.n = n;
    cfg.alphabet_size = s;
    cfg.mode = mode == "local" ? twodfa::SearchMode::LocalSearch : twodfa::SearchMode::Exhaustive;
    cfg.budget = budget;
    cfg.seed = seed;
    if (!warm_start_path.empty()) cfg.warm_start = read_automaton(warm_start_path);

    twodfa::EvalCache cache;
    std::string cache_file;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        cache_file = cache_dir + "/eval-cache.tsv";
        cache.load(cache_file);
    }

    twodfa::SearchResult result = cfg.mode == twodfa::SearchMode::Exhaustive
                                      ? twodfa::exhaustive_search(cfg, &cache)
                                      : twodfa::local_search(cfg, &cache);

    if (!cache_file.empty()) cache.save(cache_file);

    ordered_json log_line;
    log_line["config"] = {{"n", n},
                          {"alphabet", s},
                          {"mode", mode},
                          {"budget", budget},
                          {"seed", seed},
                          {"warm_start", !warm_start_path.empty()}};
    log_line["best_length"] = result.best_length;
    log_line["evaluated"] = result.evaluated;
    log_line["exhausted"] = result.exhausted;
    log_line["automaton"] = automaton_to_json(result.best);
    std::string line = log_line.dump();

    if (!log_path.empty()) {
        std::ofstream out(log_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot append to log '" + log_path + "'");
        out << line << "\n";
    }
    if (!cache_dir.empty()) {
        std::ofstream out(cache_dir + "/search-log.jsonl", std::ios::app);
        out << line << "\n";
    }

    if (format == "json") {
        std::cout << line << "\n";
    } else {
        std::cout << "best_length: " << result.best_length << "\n"
                  << "evaluated: " << result.evaluated << "\n"
                  << "exhausted: " << (result.exhausted ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& scope_name, int max_kl, int max_n, std::optional<int> k,
               std::optional<int> l, const std::string& format) {
    twodfa::VerifyReport report;
    if (k || l) {
        // Focused check of a single direction-determinate family.
        int kk = k.value_or(2);
        int ll = l.value_or(0);
        twodfa::FamilyWitness family = twodfa::build_dirdet_automaton({kk, ll});
        twodfa::ShortestResult shortest = twodfa::shortest_accepted(family.automaton);
        twodfa::VerifyRow row;
        row.description =
            "dirdet k=" + std::to_string(kk) + " l=" + std::to_string(ll) + ": shortest length";
        row.expected = std::to_string(family.expected_length);
        row.actual = shortest.found ? std::to_string(shortest.length) : "none";
        row.pass = row.expected == row.actual &&
                   shortest.found && shortest.tokens == family.witness;
        report.rows.push_back(row);
        report.overall = row.pass;
    } else {
        twodfa::VerifyScope scope = scope_name == "dirdet"    ? twodfa::VerifyScope::DirDet
                                    : scope_name == "general" ? twodfa::VerifyScope::General
                                                              : twodfa::VerifyScope::All;
        report = twodfa::run_verification(scope, {max_kl, max_n});
    }

    if (format == "json") {
        ordered_json doc;
        ordered_json rows = ordered_json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"description", row.description},
                            {"expected", row.expected},
                            {"actual", row.actual},
                            {"pass", row.pass}});
        }
        doc["rows"] = std::move(rows);
        doc["overall"] = report.overall;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << twodfa::render_verify_text(report);
    }
    return report.overall ? kExitOk : kExitVerifyFailure;
}

int cmd_table(int n_max, const std::string& cache_dir, const std::string& format) {
    if (n_max < 2) throw std::invalid_argument("table: --n-max must be at least 2");
    std::map<int, int> computed;
    if (!cache_dir.empty()) computed = read_search_log(cache_dir);

    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (int n = 2; n <= n_max; ++n) {
            ordered_json row;
            row["n"] = n;
            row["direction_determinate"] = twodfa::binomial(n, n / 2) - 1;
            row["general_lower"] = 3L * (1L << (n - 2)) - 1;
            if (auto it = computed.find(n); it != computed.end())
                row["searched"] = it->second;
            else
                row["searched"] = nullptr;
            row["general_upper"] = twodfa::binomial(2 * n, n + 1) - 1;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << twodfa::bounds_table(n_max, computed);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-way finite automata: families with long shortest accepted strings"};
    app.require_subcommand(1);
    std::string format = "text";

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a family automaton document");
    gen->require_subcommand(1);
    int gen_k = 2, gen_l = 0, gen_n = 2;
    bool gen_core = false;
    std::string gen_out, gen_sidecar;

    auto* gen_dirdet = gen->add_subcommand("dirdet", "Direction-determinate family");
    gen_dirdet->add_option("--k", gen_k, "size of Q+ (at least 2)")->required();
    gen_dirdet->add_option("--l", gen_l, "size of Q- (at least 0)")->required();
    gen_dirdet->add_option("--out", gen_out, "write the automaton here instead of stdout");
    gen_dirdet->add_option("--sidecar", gen_sidecar, "write the witness record here");

    auto* gen_general = gen->add_subcommand("general", "Doubling family");
    gen_general->add_option("--n", gen_n, "number of states (at least 2)")->required();
    gen_general->add_flag("--core", gen_core, "emit the bare core without wrapper");
    gen_general->add_option("--out", gen_out, "write the automaton here instead of stdout");
    gen_general->add_option("--sidecar", gen_sidecar, "write the witness record here");

    // pairs
    auto* pairs = app.add_subcommand("pairs", "List the ordered (P, R) pairs");
    int pairs_k = 4, pairs_l = 2;
    pairs->add_option("--k", pairs_k)->required();
    pairs->add_option("--l", pairs_l)->required();
    pairs->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run an automaton on an input string");
    std::string sim_automaton, sim_input;
    bool sim_trace = false, sim_segment = false;
    int sim_start_pos = 1, sim_start_state = 1;
    simulate->add_option("--automaton,-a", sim_automaton, "automaton file, '-' for stdin");
    simulate->add_option("--input,-i", sim_input, "whitespace-separated tokens")->required();
    simulate->add_flag("--trace", sim_trace, "print the computation diagram");
    simulate->add_flag("--segment", sim_segment, "run on a bare segment without end-markers");
    simulate->add_option("--start-pos", sim_start_pos, "segment start position (1-based)");
    simulate->add_option("--start-state", sim_start_state, "segment start state");
    simulate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // shortest
    auto* shortest = app.add_subcommand("shortest", "Exact shortest accepted string");
    std::string sh_automaton, sh_method = "behavior";
    int sh_max_len = 8;
    shortest->add_option("--automaton,-a", sh_automaton, "automaton file, '-' for stdin");
    shortest->add_option("--method", sh_method)->check(CLI::IsMember({"behavior", "brute"}));
    shortest->add_option("--max-len", sh_max_len, "horizon for the brute-force method");
    shortest->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // search
    auto* search = app.add_subcommand("search", "Hunt for automata with long shortest strings");
    int se_n = 2, se_s = 2;
    std::string se_mode = "exhaustive";
    long se_budget = 1'000'000;
    std::uint64_t se_seed = 1;
    std::string se_warm, se_cache, se_log;
    search->add_option("--n", se_n, "number of states")->required();
    search->add_option("--alphabet", se_s, "alphabet size");
    search->add_option("--mode", se_mode)->check(CLI::IsMember({"exhaustive", "local"}));
    search->add_option("--budget", se_budget, "candidate-evaluation cap");
    search->add_option("--seed", se_seed, "random seed for local search");
    search->add_option("--warm-start", se_warm, "automaton file to start climbing from");
    search->add_option("--cache", se_cache, "directory for the evaluation cache and search log");
    search->add_option("--log", se_log, "append the result line to this file");
    search->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Re-check the family claims");
    std::string ve_scope = "all";
    int ve_max_kl = 7, ve_max_n = 6;
    std::optional<int> ve_k, ve_l;
    verify->add_option("scope", ve_scope, "dirdet, general or all")
        ->check(CLI::IsMember({"dirdet", "general", "all"}));
    verify->add_option("--max-kl", ve_max_kl, "largest k+l for the dirdet suite (2..7)");
    verify->add_option("--max-n", ve_max_n, "largest n for the general suite (2..6)");
    verify->add_option("--k", ve_k, "check a single family: size of Q+");
    verify->add_option("--l", ve_l, "check a single family: size of Q-");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // table
    auto* table = app.add_subcommand("table", "Small-n bounds table");
    int ta_n_max = 6;
    std::string ta_cache;
    table->add_option("--n-max", ta_n_max, "last row of the table");
    table->add_option("--cache", ta_cache, "directory holding a search log for the searched column");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_dirdet->parsed()) {
            twodfa::FamilyWitness family = twodfa::build_dirdet_automaton({gen_k, gen_l});
            emit_generated(family.automaton,
                           witness_sidecar(family.witness, family.expected_length), gen_out,
                           gen_sidecar);
            return kExitOk;
        }
        if (gen_general->parsed()) {
            twodfa::CoreAutomaton core = twodfa::build_core(gen_n);
            int expected = static_cast<int>(core.witness.size());
            const twodfa::TwoDFA automaton = gen_core ? core.automaton : twodfa::wrap(core);
            emit_generated(automaton, witness_sidecar(core.witness, expected), gen_out,
                           gen_sidecar);
            return kExitOk;
        }
        if (pairs->parsed()) return cmd_pairs(pairs_k, pairs_l, format);
        if (simulate->parsed())
            return cmd_simulate(sim_automaton, sim_input, sim_trace, sim_segment, sim_start_pos,
                                sim_start_state, format);
        if (shortest->parsed()) return cmd_shortest(sh_automaton, sh_method, sh_max_len, format);
        if (search->parsed())
            return cmd_search(se_n, se_s, se_mode, se_budget, se_seed, se_warm, se_cache, se_log,
                              format);
        if (verify->parsed()) return cmd_verify(ve_scope, ve_max_kl, ve_max_n, ve_k, ve_l, format);
        if (table->parsed()) return cmd_table(ta_n_max, ta_cache, format);
    } catch (const twodfa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
