#include <benchmark/benchmark.h>

#include "twuality/bouquet.hpp"
#include "twuality/enumeration.hpp"
#include "twuality/gf2.hpp"
#include "twuality/set_system.hpp"
#include "twuality/width_polynomial.hpp"

using namespace twuality;

namespace {

SetSystem binary_system(std::size_t n, std::uint64_t seed) {
    Lcg64 rng(seed);
    return from_matrix(sample_symmetric_matrix(n, rng), {}, 64);
}

void BM_twuality_polynomial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SetSystem d = binary_system(n, 1);
    const TwualWord word = TwualWord::parse("x*");
    for (auto _ : state) {
        benchmark::DoNotOptimize(twuality_polynomial(d, word, 1, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_twuality_polynomial)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_twuality_polynomial_threads(benchmark::State& state) {
    const SetSystem d = binary_system(12, 1);
    const TwualWord word = TwualWord::parse("x*");
    const auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twuality_polynomial(d, word, jobs, 12));
    }
}
BENCHMARK(BM_twuality_polynomial_threads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_gf2_nonsingular(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Lcg64 rng(2);
    const Gf2SymMatrix m = sample_symmetric_matrix(n, rng);
    const SubsetMask all = SubsetMask::full(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2_nonsingular(m, all));
    }
}
BENCHMARK(BM_gf2_nonsingular)->Arg(16)->Arg(32)->Arg(64);

void BM_from_matrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Lcg64 rng(3);
    const Gf2SymMatrix m = sample_symmetric_matrix(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(from_matrix(m, {}, n));
    }
}
BENCHMARK(BM_from_matrix)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_boundary_components(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto diagrams = sample_signed_chord_diagrams(m, 1, 4);
    const SubsetMask all = SubsetMask::full(static_cast<std::size_t>(m));
    for (auto _ : state) {
        benchmark::DoNotOptimize(boundary_components(diagrams.front(), all));
    }
}
BENCHMARK(BM_boundary_components)->Arg(4)->Arg(6)->Arg(8);

void BM_is_delta_matroid(benchmark::State& state) {
    const SetSystem d = binary_system(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_delta_matroid(d));
    }
}
BENCHMARK(BM_is_delta_matroid)->Arg(4)->Arg(6)->Arg(8);

void BM_is_vf_safe(benchmark::State& state) {
    const SetSystem d = binary_system(static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_vf_safe(d));
    }
}
BENCHMARK(BM_is_vf_safe)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_enumerate_delta_matroids(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_delta_matroids(n));
    }
}
BENCHMARK(BM_enumerate_delta_matroids)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
