// Serial vs OpenMP kernels: truncated products and theta enumeration.

#include "ack/kernels.hpp"
#include "ack/lattice.hpp"
#include "ack/rootdata.hpp"

#include <benchmark/benchmark.h>

using namespace ack;

namespace {

std::vector<Integer> partition_like(std::size_t n)
{
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Integer(1) << static_cast<unsigned>(i % 97);
    return v;
}

template <auto Kernel>
void bm_convolve(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = partition_like(n), b = partition_like(n);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b, n));
}

struct ThetaCase {
    Matrix gram;
    std::vector<Rational> shift;
};

ThetaCase root_lattice(Family f, int n)
{
    auto rs = build_root_system(LieType::make(f, n));
    return {rs.root_form, std::vector<Rational>(n)};
}

template <auto Kernel>
void bm_theta(benchmark::State& state)
{
    const auto c = state.range(0) == 8 ? root_lattice(Family::E, 8) : root_lattice(Family::A, static_cast<int>(state.range(0)));
    const Rational order = state.range(1);
    const auto box = enumeration_box(c.gram, c.shift, order);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(c.gram, c.shift, box, order));
}

}  // namespace

BENCHMARK(bm_convolve<kernels::convolve_serial>)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_convolve<kernels::convolve_parallel>)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_theta<kernels::theta_serial>)->Args({2, 12})->Args({4, 4})->Args({8, 3});
BENCHMARK(bm_theta<kernels::theta_parallel>)->Args({2, 12})->Args({4, 4})->Args({8, 3});

BENCHMARK_MAIN();
