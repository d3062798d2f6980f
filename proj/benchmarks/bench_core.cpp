#include <benchmark/benchmark.h>

#include "schubert/curvature.hpp"
#include "schubert/lambda_ring.hpp"
#include "schubert/schur_functor.hpp"
#include "schubert/schur_ring.hpp"

namespace {

using namespace schubert;

Partition bench_shape(int w) {
    switch (w) {
        case 3: return Partition{2, 1};
        case 4: return Partition{2, 2};
        case 5: return Partition{3, 2};
        case 6: return Partition{3, 2, 1};
        default: return Partition{w};
    }
}

void BM_SchurMultiply(benchmark::State& state) {
    auto pool = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& la : pool)
            for (const auto& mu : pool) benchmark::DoNotOptimize(schur_multiply(la, mu));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SchurMultiply)->DenseRange(2, 6)->Complexity();

void BM_LrOracle(benchmark::State& state) {
    Partition la{2, 1}, mu = state.range(0) == 2 ? Partition{1, 1} : Partition{2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(lr_oracle(la, mu));
}
BENCHMARK(BM_LrOracle)->Arg(2)->Arg(3);

void BM_SymmetrizerSquare(benchmark::State& state) {
    Partition la = bench_shape(static_cast<int>(state.range(0)));
    GroupAlgebraElement c = young_symmetrizer(la);
    for (auto _ : state) benchmark::DoNotOptimize(c * c);
}
BENCHMARK(BM_SymmetrizerSquare)->DenseRange(3, 6);

void BM_SchurMatrix(benchmark::State& state) {
    RationalMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = mpq_class(i + 2 * j + 1, 1 + ((i + j) % 2));
    Partition la{2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(schur_matrix(la, a));
}
BENCHMARK(BM_SchurMatrix);

void BM_WedgeDecompose(benchmark::State& state) {
    int m = 2, n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wedge_decompose(Partition{2, 1}, Partition{1}, m, n));
}
BENCHMARK(BM_WedgeDecompose)->Arg(2)->Arg(3);

void BM_SchubertFormTop(benchmark::State& state) {
    int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(0));
    std::vector<int> rect(static_cast<std::size_t>(n), m);
    Partition top(rect);
    for (auto _ : state) benchmark::DoNotOptimize(schubert_form(top, m, n));
}
BENCHMARK(BM_SchubertFormTop)->Arg(2)->Arg(3);

void BM_ChernClass(benchmark::State& state) {
    TorusElement y = symplectic_standard_character(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chern_class(2, y));
}
BENCHMARK(BM_ChernClass)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
