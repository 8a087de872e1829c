#include <benchmark/benchmark.h>

#include "mace/capacity.hpp"
#include "mace/families.hpp"

namespace {

void BM_ProtocolValue(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::RvbFerro{3.0});
    const mace::ProjectiveQubitBasis basis{0.4, 1.1};
    for (auto _ : state) benchmark::DoNotOptimize(mace::unassisted_protocol_value(s, 0, 1, basis, basis).value);
}
BENCHMARK(BM_ProtocolValue);

void BM_BellValue(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::W2{});
    for (auto _ : state) benchmark::DoNotOptimize(mace::assisted_bell_value(s, 0, 1).value);
}
BENCHMARK(BM_BellValue);

// Sweep at N x N, one thread.
void BM_Sweep(benchmark::State& state) {
    const auto s = mace::make_state(mace::family::RvbFerro{2.0});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mace::sweep_unassisted(s, {n, n}).best.value);
}
BENCHMARK(BM_Sweep)->Arg(21)->Arg(101)->Unit(benchmark::kMillisecond);

} // namespace
