// Microbenchmarks for the expensive paths: the three face-polynomial
// computations at growing word length, series construction, lattice-point
// counting, and the geometric face-lattice build.  Alternating words are
// the worst case for everything driven by subword structure.

#include <benchmark/benchmark.h>

#include "descent/ehrhart.hpp"
#include "descent/fvector.hpp"
#include "descent/geometry.hpp"
#include "descent/nc_series.hpp"
#include "descent/words.hpp"

using namespace descent;

namespace {

void BM_FDirect(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(f_direct(w));
}
BENCHMARK(BM_FDirect)->DenseRange(4, 16, 4);

void BM_FRecurrence(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(f_recurrence(w));
}
BENCHMARK(BM_FRecurrence)->DenseRange(4, 16, 4);

void BM_FFactorization(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(f_factorization(w));
}
BENCHMARK(BM_FFactorization)->DenseRange(4, 16, 4);

void BM_FpolySeries(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fpoly_series(trunc));
}
BENCHMARK(BM_FpolySeries)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State& state) {
    XYWord w = alternating_word(8, Letter::X);
    long long r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(w, r));
}
BENCHMARK(BM_LatticePoints)->RangeMultiplier(10)->Range(10, 100000);

void BM_EhrhartInterpolation(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_polynomial(w));
}
BENCHMARK(BM_EhrhartInterpolation)->DenseRange(4, 12, 4);

void BM_LatticePointSeries(benchmark::State& state) {
    int trunc = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lattice_point_series(3, trunc));
}
BENCHMARK(BM_LatticePointSeries)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FaceLattice(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(FaceLattice::build(w));
}
BENCHMARK(BM_FaceLattice)->DenseRange(5, 9, 1)->Unit(benchmark::kMillisecond);

void BM_VertexEnumeration(benchmark::State& state) {
    XYWord w = alternating_word(static_cast<int>(state.range(0)), Letter::X);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(w));
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(8, 14, 2);

}  // namespace

BENCHMARK_MAIN();
