#include <benchmark/benchmark.h>

#include "cylcob/bar_rep.hpp"
#include "cylcob/normal_form.hpp"
#include "cylcob/sampling.hpp"
#include "cylcob/text.hpp"

namespace {

using namespace cylcob;

std::vector<GeneratorWord> corpus(int count, int max_arity, int max_length) {
    WordSampler sampler(424242, max_arity, max_length);
    std::vector<GeneratorWord> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sampler.random_word());
    return out;
}

void BM_evaluate(benchmark::State& state) {
    const auto words = corpus(64, static_cast<int>(state.range(0)), 24);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(words[i++ % words.size()]));
    }
}
BENCHMARK(BM_evaluate)->Arg(6)->Arg(12)->Arg(24);

void BM_normalize(benchmark::State& state) {
    const auto words = corpus(64, 10, static_cast<int>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(words[i++ % words.size()]));
    }
}
BENCHMARK(BM_normalize)->Arg(10)->Arg(20)->Arg(40);

void BM_word_matrix(benchmark::State& state) {
    const auto words = corpus(32, 5, 10);
    const int dim = static_cast<int>(state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(word_matrix(words[i++ % words.size()], dim));
    }
}
BENCHMARK(BM_word_matrix)->Arg(2)->Arg(3);

void BM_relation_suite(benchmark::State& state) {
    const int max_k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (const RelationInstance& inst : all_relation_instances(max_k))
            benchmark::DoNotOptimize(check_relation(inst));
    }
}
BENCHMARK(BM_relation_suite)->Arg(4)->Arg(8);

void BM_parse_print(benchmark::State& state) {
    const auto words = corpus(64, 10, 20);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_word(print_word(words[i++ % words.size()])));
    }
}
BENCHMARK(BM_parse_print);

}  // namespace

BENCHMARK_MAIN();
