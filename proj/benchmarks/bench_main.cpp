#include <benchmark/benchmark.h>

#include "qsent/entropy.hpp"
#include "qsent/sampler.hpp"
#include "qsent/spectra.hpp"
#include "qsent/tradeoff.hpp"

using namespace qsent;

namespace {

KrausChannel full_rank(std::ptrdiff_t d) {
    return sample({d, static_cast<std::size_t>(d * d), 7, ChannelFamily::Cptp, {}, 0.0});
}

} // namespace

static void BM_DynamicalEigenvalues(benchmark::State& state) {
    const auto dm = dynamical_from_kraus(full_rank(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(dm.matrix));
}
BENCHMARK(BM_DynamicalEigenvalues)->DenseRange(2, 8, 2);

static void BM_SuperoperatorSingularValues(benchmark::State& state) {
    const auto km = superoperator_from_kraus(full_rank(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(singular_values(km.matrix));
}
BENCHMARK(BM_SuperoperatorSingularValues)->DenseRange(2, 8, 2);

static void BM_SampleCptp(benchmark::State& state) {
    const auto d = state.range(0);
    std::uint64_t seed = 0;
    const auto k = static_cast<std::size_t>(d * d);
    for (auto _ : state) benchmark::DoNotOptimize(sample({d, k, seed++, ChannelFamily::Cptp, {}, 0.0}));
}
BENCHMARK(BM_SampleCptp)->DenseRange(2, 4);

static void BM_Profile(benchmark::State& state) {
    const auto ch = full_rank(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(profile(ch));
}
BENCHMARK(BM_Profile)->DenseRange(2, 4);

// One (q,s) cell on a precomputed profile: this is the sweep's inner loop.
static void BM_TradeoffCell(benchmark::State& state) {
    const auto prof = profile(full_rank(3));
    for (auto _ : state) benchmark::DoNotOptimize(tradeoff_report(prof, {1.5, 0.5}));
}
BENCHMARK(BM_TradeoffCell);

static void BM_SchattenNorm(benchmark::State& state) {
    const auto km = superoperator_from_kraus(full_rank(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(schatten_norm(km.matrix, NormOrder(3.0)));
}
BENCHMARK(BM_SchattenNorm)->DenseRange(2, 4);

BENCHMARK_MAIN();
