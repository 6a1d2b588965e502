#include <benchmark/benchmark.h>

#include "shtk/generators.hpp"
#include "shtk/kernels.hpp"

using namespace shtk;

namespace {

Matrix random_matrix(gen::Rng& rng, const Group& g, std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = gen::random_ring_element(rng, g, 3, 9);
        }
    }
    return m;
}

IntMatrix random_int_matrix(gen::Rng& rng, std::size_t n)
{
    IntMatrix m(n, n);
    for (auto& x : m.data) {
        x = rng.range(-50, 50);
    }
    return m;
}

template <Matrix (*Compose)(const Group&, const Matrix&, const Matrix&)>
void bm_compose(benchmark::State& state)
{
    const GroupPtr g = Group::make(GroupSpec::free(2));
    gen::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(rng, *g, n);
    const Matrix b = random_matrix(rng, *g, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Compose(*g, a, b));
    }
}

template <std::vector<Integer> (*Smith)(IntMatrix)>
void bm_smith(benchmark::State& state)
{
    gen::Rng rng(2);
    const IntMatrix m = random_int_matrix(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Smith(m));
    }
}

}  // namespace

BENCHMARK(bm_compose<kernels::serial::compose>)->Name("compose/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_compose<kernels::parallel::compose>)->Name("compose/parallel")->Arg(16)->Arg(32)->Arg(64)->UseRealTime();
BENCHMARK(bm_smith<kernels::serial::smith_invariants>)->Name("smith/serial")->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(bm_smith<kernels::parallel::smith_invariants>)->Name("smith/parallel")->Arg(20)->Arg(60)->Arg(120)->UseRealTime();

BENCHMARK_MAIN();
