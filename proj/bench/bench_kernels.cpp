#include <benchmark/benchmark.h>

#include "centangle/haar.hpp"
#include "centangle/purity.hpp"
#include "centangle/stabilizer.hpp"

using namespace centangle;

namespace {

PureState bench_state(int n) { return sample_haar_state(n, 12345); }

StabilizerGroup bench_group(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return graph_state_group(Graph(n, edges));
}

void bm_purity_sweep_serial(benchmark::State& state) {
    const PureState psi = bench_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(purity_vector_serial(psi));
}

void bm_purity_sweep_parallel(benchmark::State& state) {
    const PureState psi = bench_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(purity_vector(psi));
}

void bm_weight_enum_serial(benchmark::State& state) {
    const StabilizerGroup g = bench_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights_serial(g));
}

void bm_weight_enum_parallel(benchmark::State& state) {
    const StabilizerGroup g = bench_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights(g));
}

}  // namespace

BENCHMARK(bm_purity_sweep_serial)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(bm_purity_sweep_parallel)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(bm_weight_enum_serial)->Arg(16)->Arg(20);
BENCHMARK(bm_weight_enum_parallel)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
