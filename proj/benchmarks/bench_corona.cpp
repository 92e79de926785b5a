// Compares the product-formula characteristic polynomials of corona
// constructions against brute force on the explicitly built digraph.

#include <benchmark/benchmark.h>

#include <corona/corona.hpp>
#include <corona/digraph.hpp>

namespace {

using namespace corona;

void BM_vertex_corona_formula(benchmark::State& state) {
    const Digraph d1 = make_family(Family::cycle, static_cast<int>(state.range(0)));
    const Digraph d2 = make_family(Family::path, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(vertex_corona_charpoly(d1, d2, MatrixKind::laplacian));
}

void BM_vertex_corona_direct(benchmark::State& state) {
    const Digraph d1 = make_family(Family::cycle, static_cast<int>(state.range(0)));
    const Digraph d2 = make_family(Family::path, 3);
    const Digraph built = vertex_corona(d1, d2, CoronaDirection::symmetric);
    for (auto _ : state)
        benchmark::DoNotOptimize(charpoly(matrix_of(built, MatrixKind::laplacian)));
}

void BM_arc_corona_formula(benchmark::State& state) {
    const Digraph d1 = make_family(Family::cycle, static_cast<int>(state.range(0)));
    const Digraph d2 = make_family(Family::path, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            arc_corona_charpoly(d1, d2, CoronaDirection::symmetric, MatrixKind::adjacency));
}

void BM_arc_corona_direct(benchmark::State& state) {
    const Digraph d1 = make_family(Family::cycle, static_cast<int>(state.range(0)));
    const Digraph d2 = make_family(Family::path, 2);
    const Digraph built = arc_corona(d1, d2, CoronaDirection::symmetric);
    for (auto _ : state)
        benchmark::DoNotOptimize(charpoly(matrix_of(built, MatrixKind::adjacency)));
}

void BM_spectrum_description(benchmark::State& state) {
    const Digraph d1 = make_family(Family::path, static_cast<int>(state.range(0)));
    const Digraph d2 = make_family(Family::cycle, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            vertex_corona_spectrum_outregular(d1, d2, MatrixKind::laplacian));
}

}  // namespace

BENCHMARK(BM_vertex_corona_formula)->DenseRange(2, 8, 2);
BENCHMARK(BM_vertex_corona_direct)->DenseRange(2, 8, 2);
BENCHMARK(BM_arc_corona_formula)->DenseRange(2, 8, 2);
BENCHMARK(BM_arc_corona_direct)->DenseRange(2, 8, 2);
BENCHMARK(BM_spectrum_description)->DenseRange(2, 6, 2);
