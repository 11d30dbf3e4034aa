#include <benchmark/benchmark.h>

#include <random>

#include "steval/content.hpp"
#include "steval/corpus.hpp"

using namespace steval;

namespace {

TokenText random_text(int len, int vocab, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, vocab - 1);
    TokenText t;
    for (int i = 0; i < len; ++i) t.tokens.push_back("w" + std::to_string(pick(rng)));
    t.raw = t.joined();
    return t;
}

EmbeddingTable random_embeddings(int vocab, int dim, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    EmbeddingTable E;
    E.dimension = dim;
    for (int i = 0; i < vocab; ++i) {
        std::vector<double> v(dim);
        for (double& x : v) x = g(rng);
        E.entries.emplace("w" + std::to_string(i), std::move(v));
    }
    return E;
}

}  // namespace

static void BM_Bleu(benchmark::State& state) {
    std::mt19937 rng(7);
    auto a = random_text(20, 50, rng), b = random_text(20, 50, rng);
    for (auto _ : state) benchmark::DoNotOptimize(bleu(a, b));
}
BENCHMARK(BM_Bleu);

static void BM_Wmd(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    auto E = random_embeddings(200, 50, rng);
    auto a = random_text(len, 200, rng), b = random_text(len, 200, rng);
    for (auto _ : state) benchmark::DoNotOptimize(wmd(a, b, E));
}
BENCHMARK(BM_Wmd)->Arg(5)->Arg(15)->Arg(30);

BENCHMARK_MAIN();
