// Decider and table arithmetic timings on the exponential family w_n.
#include <benchmark/benchmark.h>

#include "thmon/wordproblem.hpp"

namespace {

const thmon::Alphabet kBinary(2);

void BM_PolyDecider(benchmark::State& state) {
    thmon::GenWord w = thmon::exponential_family_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thmon::word_problem_poly(w, w, kBinary));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyDecider)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_EvaluateTable(benchmark::State& state) {
    thmon::GenWord w = thmon::exponential_family_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thmon::evaluate(w, kBinary).size());
}
BENCHMARK(BM_EvaluateTable)->DenseRange(2, 14, 4);

void BM_BruteForce(benchmark::State& state) {
    thmon::GenWord w = thmon::exponential_family_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thmon::word_problem_bruteforce(w, w, kBinary));
}
BENCHMARK(BM_BruteForce)->DenseRange(2, 4, 1);

void BM_InverseImageDfa(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<thmon::Morphism> seq =
        thmon::resolve_for_poly(thmon::exponential_family_word(n), kBinary, 8);
    thmon::AcyclicDfa target = thmon::dfa_for_word(thmon::Word{0}, kBinary);
    for (auto _ : state) benchmark::DoNotOptimize(thmon::iterated_inverse_image_dfa(seq, target).size());
}
BENCHMARK(BM_InverseImageDfa)->RangeMultiplier(2)->Range(2, 64);

}  // namespace

BENCHMARK_MAIN();
