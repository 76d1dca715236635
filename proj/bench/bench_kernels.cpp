// Serial reference vs OpenMP grid kernels on the family sign check.

#include "imean/family.hpp"
#include "imean/grid.hpp"
#include "imean/kernels.hpp"
#include "imean/thresholds.hpp"
#include "imean/verification.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace imean;

std::vector<double> grid_of(std::size_t n) {
    GridSpec g;
    g.count = n;
    return make_grid(g);
}

void run_kernel(benchmark::State& state, kernels::Backend backend) {
    const auto xs = grid_of(static_cast<std::size_t>(state.range(0)));
    const ThresholdSet th = sharp_thresholds(2.0);
    const FamilyParams params(th.p, 2.0);
    for (auto _ : state) {
        auto margins = kernels::evaluate(xs, [&](double x) { return -family_f(params, x); }, backend);
        auto summary = kernels::summarize(margins, backend);
        benchmark::DoNotOptimize(summary);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FamilyMarginsSerial(benchmark::State& state) { run_kernel(state, kernels::Backend::serial); }
void BM_FamilyMarginsOpenMP(benchmark::State& state) { run_kernel(state, kernels::Backend::openmp); }

BENCHMARK(BM_FamilyMarginsSerial)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_FamilyMarginsOpenMP)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_EmpiricalThreshold(benchmark::State& state) {
    const auto backend = state.range(0) == 0 ? kernels::Backend::serial : kernels::Backend::openmp;
    for (auto _ : state) benchmark::DoNotOptimize(empirical_threshold(2.0, Side::lower, {}, 1e-6, {backend}));
}
BENCHMARK(BM_EmpiricalThreshold)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
