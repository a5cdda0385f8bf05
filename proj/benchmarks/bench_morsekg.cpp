#include <benchmark/benchmark.h>

#include "morsekg/oracle.hpp"
#include "morsekg/potential.hpp"
#include "morsekg/spectrum.hpp"
#include "morsekg/wavefunction.hpp"

namespace {

using namespace morsekg;

const PotentialSpec desk_pot(cplx(2.0), cplx(4.0), 1.0);
const MassModel desk_mass(1.0, 0.1);

void BM_reduce(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce(desk_pot, desk_mass, 1.0, cplx(0.5)));
}
BENCHMARK(BM_reduce);

void BM_constant_mass_level(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            constant_mass_energy(10, desk_pot, 1.0, 1.0, Branch::particle));
}
BENCHMARK(BM_constant_mass_level);

void BM_pdm_level(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pdm_energy(10, desk_pot, desk_mass, 1.0, Branch::particle));
}
BENCHMARK(BM_pdm_level);

void BM_complex_level(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            complex_energy(10, 1.0, 0.6, 0.3, desk_mass, Branch::particle));
}
BENCHMARK(BM_complex_level);

void BM_build_series(benchmark::State& state) {
    const auto rp = reduce(desk_pot, desk_mass, 1.0, cplx(0.0));
    const cplx L = quantization_L(4, rp);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_series(rp, L, n));
}
BENCHMARK(BM_build_series)->Arg(8)->Arg(32)->Arg(128);

void BM_determinant_residual(benchmark::State& state) {
    const auto rp = reduce(desk_pot, desk_mass, 1.0, cplx(0.0));
    const cplx L = quantization_L(4, rp);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(determinant_residual(rp, L, n));
}
BENCHMARK(BM_determinant_residual)->Arg(8)->Arg(64);

void BM_evaluate_psi(benchmark::State& state) {
    const auto rp = reduce(desk_pot, desk_mass, 1.0, cplx(0.0));
    const auto ws = build_series(rp, quantization_L(4, rp), 32);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_psi(ws, x, 1.0));
        x = x < 5.0 ? x + 0.01 : 0.0;
    }
}
BENCHMARK(BM_evaluate_psi);

void BM_oracle_solve(benchmark::State& state) {
    const MassModel constant(1.0, 0.0);
    const GridSpec grid(25.0, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_effective(desk_pot, constant, 1.0, grid, 4));
}
BENCHMARK(BM_oracle_solve)->Arg(513)->Arg(2049)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
