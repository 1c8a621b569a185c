// Microbenchmarks for the hot kernels: the full-tape simulator, the
// prefix-behavior extension, the behavior BFS and candidate evaluation.

#include <benchmark/benchmark.h>

#include <random>

#include "twodfa/dirdet_family.hpp"
#include "twodfa/general_family.hpp"
#include "twodfa/search.hpp"
#include "twodfa/shortest.hpp"
#include "twodfa/simulate.hpp"

using namespace twodfa;

namespace {

void BM_run_full_witness(benchmark::State& state) {
    CoreAutomaton core = build_core(static_cast<int>(state.range(0)));
    TwoDFA wrapped = wrap(core);
    for (auto _ : state) {
        RunOutcome out = run_full(wrapped, core.witness);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_run_full_witness)->Arg(4)->Arg(5)->Arg(6);

void BM_extend_behavior_chain(benchmark::State& state) {
    CoreAutomaton core = build_core(static_cast<int>(state.range(0)));
    TwoDFA wrapped = wrap(core);
    for (auto _ : state) {
        Behavior b = initial_behavior(wrapped);
        for (const std::string& tok : core.witness) b = extend_behavior(wrapped, b, tok);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_extend_behavior_chain)->Arg(4)->Arg(5);

void BM_shortest_dirdet(benchmark::State& state) {
    FamilyWitness family =
        build_dirdet_automaton({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
    for (auto _ : state) {
        ShortestResult result = shortest_accepted(family.automaton);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_shortest_dirdet)->Args({4, 2})->Args({5, 2})->Args({4, 3});

void BM_shortest_general(benchmark::State& state) {
    TwoDFA wrapped = wrap(build_core(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        ShortestResult result = shortest_accepted(wrapped);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_shortest_general)->Arg(4)->Arg(5)->Arg(6);

void BM_canonical_form(benchmark::State& state) {
    std::mt19937_64 rng(12);
    TwoDFA a = random_automaton(rng, 3, 4);
    for (auto _ : state) {
        std::string key = canonical_form(a);
        benchmark::DoNotOptimize(key);
    }
}
BENCHMARK(BM_canonical_form);

void BM_evaluate_cached(benchmark::State& state) {
    std::mt19937_64 rng(12);
    TwoDFA a = random_automaton(rng, 3, 4);
    EvalCache cache;
    evaluate(a, &cache);
    for (auto _ : state) {
        auto score = evaluate(a, &cache);
        benchmark::DoNotOptimize(score);
    }
}
BENCHMARK(BM_evaluate_cached);

}  // namespace

BENCHMARK_MAIN();
