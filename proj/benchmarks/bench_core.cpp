#include <benchmark/benchmark.h>

#include "fuzzylab/circle_model.hpp"
#include "fuzzylab/convergence.hpp"
#include "fuzzylab/fuzzy_harmonics.hpp"
#include "fuzzylab/radial_oracle.hpp"
#include "fuzzylab/sphere_model.hpp"

using namespace fuzzylab;

static void BM_Matmul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    OperatorMatrix a(n), b(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            a(r, c) = Complex(0.3 * r - c, 0.1 * c);
            b(r, c) = Complex(r + 0.7 * c, -0.2 * r);
        }
    for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}
BENCHMARK(BM_Matmul)->Arg(25)->Arg(81)->Arg(121);

static void BM_HermitianEig(benchmark::State& state) {
    const int lambda = static_cast<int>(state.range(0));
    const CircleModel m = build_circle(lambda, default_k_schedule(lambda));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m.R2));
}
BENCHMARK(BM_HermitianEig)->Arg(5)->Arg(10)->Arg(20);

static void BM_VerifyProp31(benchmark::State& state) {
    const int lambda = static_cast<int>(state.range(0));
    const LadderTable t(lambda + 1);
    const SphereModel m = build_sphere(lambda, default_k_schedule(lambda), t);
    for (auto _ : state) benchmark::DoNotOptimize(verify_sphere_identities(m));
}
BENCHMARK(BM_VerifyProp31)->Arg(4)->Arg(8);

static void BM_FuzzyHarmonics(benchmark::State& state) {
    const int lambda = static_cast<int>(state.range(0));
    const LadderTable t(lambda + 1);
    const SphereModel m = build_sphere(lambda, default_k_schedule(lambda), t);
    for (auto _ : state) benchmark::DoNotOptimize(build_fuzzy_harmonics(m));
}
BENCHMARK(BM_FuzzyHarmonics)->Arg(2)->Arg(4);

static void BM_FdSpectrum(benchmark::State& state) {
    const double k = 1e6;
    const RadialGrid grid = default_radial_grid(3, k, 2);
    for (auto _ : state) benchmark::DoNotOptimize(fd_spectrum(3, k, 2, 2, grid));
}
BENCHMARK(BM_FdSpectrum);

BENCHMARK_MAIN();
