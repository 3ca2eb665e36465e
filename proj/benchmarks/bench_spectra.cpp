#include <benchmark/benchmark.h>

#include "corospec/corona.hpp"
#include "corospec/eigensolver.hpp"
#include "corospec/generators.hpp"
#include "corospec/linsolve.hpp"
#include "corospec/predict.hpp"
#include "corospec/spectra.hpp"

using namespace corospec;

namespace {

SymmetricMatrix banded_test_matrix(int n) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, double(i % 7));
        if (i + 1 < n) m.set(i, i + 1, 1.0);
        if (i + 3 < n) m.set(i, i + 3, 0.5);
    }
    return m;
}

void BM_SymEigenvalues(benchmark::State& state) {
    const auto m = banded_test_matrix(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_eigenvalues_raw(m));
}
BENCHMARK(BM_SymEigenvalues)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_Determinant(benchmark::State& state) {
    const auto m = banded_test_matrix(int(state.range(0)));
    Matrix shifted(m.order(), m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            shifted(i, j) = (i == j ? 25.0 : 0.0) - m.at(i, j);
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant(shifted));
}
BENCHMARK(BM_Determinant)->Arg(64)->Arg(256);

void BM_ComposeQEdge(benchmark::State& state) {
    const auto g1 = petersen_graph();
    const auto g2 = path_graph(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(CoronaKind::q_edge, g1, g2));
}
BENCHMARK(BM_ComposeQEdge);

// closed form vs oracle on the same 50-vertex composite
void BM_PredictSpectrum(benchmark::State& state) {
    const auto spec1 = RegularSpec::from_graph(petersen_graph());
    const auto spec2 = RegularSpec::from_graph(complete_graph(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(predict_spectrum(
            CoronaKind::splitting_neighbourhood, spec1, spec2, Alpha(0.5)));
}
BENCHMARK(BM_PredictSpectrum);

void BM_OracleSpectrum(benchmark::State& state) {
    const auto comp = compose(CoronaKind::splitting_neighbourhood,
                              petersen_graph(), complete_graph(3));
    const auto m = a_alpha_matrix(comp.graph, Alpha(0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_eigenvalues_raw(m));
}
BENCHMARK(BM_OracleSpectrum);

} // namespace

BENCHMARK_MAIN();
