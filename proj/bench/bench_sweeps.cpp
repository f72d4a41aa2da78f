#include <benchmark/benchmark.h>

#include <vector>

#include "crosscalc/generate.hpp"
#include "crosscalc/sweep.hpp"

using namespace crosscalc;

namespace {

CadlagPath bench_path(std::int64_t nodes) { return generate({Family::MixedJumpLinear, nodes, 42, 1.0}); }

std::vector<double> level_grid(const CadlagPath& p, std::size_t count) {
    const auto levels = critical_levels(p, 0, p.horizon());
    const double lo = levels.front();
    const double hi = levels.back();
    std::vector<double> zs(count);
    for (std::size_t k = 0; k < count; ++k) zs[k] = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
    return zs;
}

void BM_LevelCountsSerial(benchmark::State& state) {
    const auto p = bench_path(state.range(0));
    const auto zs = level_grid(p, 4096);
    for (auto _ : state) benchmark::DoNotOptimize(level_counts_serial(p, zs, 0, p.horizon()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(zs.size()));
}

void BM_LevelCountsParallel(benchmark::State& state) {
    const auto p = bench_path(state.range(0));
    const auto zs = level_grid(p, 4096);
    for (auto _ : state) benchmark::DoNotOptimize(level_counts_parallel(p, zs, 0, p.horizon()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(zs.size()));
}

const SweepInstance kInstance = [](std::uint64_t id) {
    return verify_identity(sweep_path(7, id), polynomial({0, 0, 1}), sweep_path(7, id).horizon(), Identity::BanInd1,
                           0.0, 1e-9);
};

void BM_IdentitySweepSerial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(identity_sweep_serial(n, kInstance));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IdentitySweepParallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(identity_sweep_parallel(n, kInstance));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_LevelCountsSerial)->Arg(40)->Arg(400);
BENCHMARK(BM_LevelCountsParallel)->Arg(40)->Arg(400);
BENCHMARK(BM_IdentitySweepSerial)->Arg(64)->Arg(512);
BENCHMARK(BM_IdentitySweepParallel)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
