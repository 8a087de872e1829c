#include <benchmark/benchmark.h>

#include "mace/families.hpp"
#include "mace/measures.hpp"

namespace {

void BM_Ggm(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::RvbFerro{2.0});
    for (auto _ : state) benchmark::DoNotOptimize(mace::ggm(s));
}
BENCHMARK(BM_Ggm);

void BM_SchmidtSpectrum(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::Chi{});
    const mace::Bipartition split({0, 1}, 4);
    for (auto _ : state) benchmark::DoNotOptimize(mace::schmidt_spectrum(s, split));
}
BENCHMARK(BM_SchmidtSpectrum);

void BM_Gm(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::W{});
    mace::GmOptions options;
    options.restarts = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mace::gm(s, options).value);
}
BENCHMARK(BM_Gm)->Arg(1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace
