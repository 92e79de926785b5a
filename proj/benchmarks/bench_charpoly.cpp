// Compares the two characteristic-polynomial algorithms (Faddeev–LeVerrier
// trace recurrence vs the division-free Berkowitz method) and the two coronal
// routes (adjugate series vs cofactor expansion) across matrix sizes.

#include <benchmark/benchmark.h>

#include <corona/charpoly.hpp>
#include <corona/digraph.hpp>
#include <corona/oracle.hpp>

namespace {

using namespace corona;

ExactMatrix bench_matrix(int n) {
    return matrix_of(oracle::random_digraph(12345, n, 0.4), MatrixKind::adjacency);
}

void BM_charpoly_faddeev_leverrier(benchmark::State& state) {
    const ExactMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}

void BM_charpoly_berkowitz(benchmark::State& state) {
    const ExactMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_charpoly(m));
}

void BM_coronal_adjugate_series(benchmark::State& state) {
    const ExactMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(coronal(m));
}

void BM_coronal_cofactor_expansion(benchmark::State& state) {
    const ExactMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_coronal(m));
}

}  // namespace

BENCHMARK(BM_charpoly_faddeev_leverrier)->DenseRange(4, 16, 4);
BENCHMARK(BM_charpoly_berkowitz)->DenseRange(4, 16, 4);
BENCHMARK(BM_coronal_adjugate_series)->DenseRange(3, 9, 3);
BENCHMARK(BM_coronal_cofactor_expansion)->DenseRange(3, 9, 3);
