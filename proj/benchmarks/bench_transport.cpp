#include <benchmark/benchmark.h>

#include <random>

#include "steval/transport.hpp"

using namespace steval;

namespace {

Distribution random_distribution(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    Distribution d;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        d.masses.push_back(u(rng));
        sum += d.masses.back();
    }
    for (double& m : d.masses) m /= sum;
    return d;
}

GroundDistance random_costs(int n, int m, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    GroundDistance d;
    d.rows = n;
    d.cols = m;
    for (int i = 0; i < n * m; ++i) d.costs.push_back(u(rng));
    return d;
}

}  // namespace

static void BM_Emd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(42);
    auto p = random_distribution(n, rng);
    auto q = random_distribution(n, rng);
    auto d = random_costs(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(emd(p, q, d));
}
BENCHMARK(BM_Emd)->Arg(2)->Arg(6)->Arg(16)->Arg(32);

static void BM_EmdBinary(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(emd_binary(0.73, 0.21));
}
BENCHMARK(BM_EmdBinary);
