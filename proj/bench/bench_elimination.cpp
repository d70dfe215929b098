#include "grm/homalg.hpp"
#include "grm/matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

grm::Matrix random_matrix(std::size_t n, const grm::Field& f)
{
    std::mt19937_64 rng(n);
    grm::Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, f.from_int(static_cast<long>(rng() % 21) - 10));
    return m;
}

template <bool Parallel>
void echelon(benchmark::State& state, grm::Field f)
{
    const grm::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), f);
    for (auto _ : state) {
        auto e = Parallel ? grm::kernels::row_echelon_parallel(m) : grm::kernels::row_echelon_serial(m);
        benchmark::DoNotOptimize(e.pivots.data());
    }
}

void serial_q(benchmark::State& s) { echelon<false>(s, grm::Field::rationals()); }
void parallel_q(benchmark::State& s) { echelon<true>(s, grm::Field::rationals()); }
void serial_f101(benchmark::State& s) { echelon<false>(s, grm::Field::prime(101)); }
void parallel_f101(benchmark::State& s) { echelon<true>(s, grm::Field::prime(101)); }

void dual_numbers_resolution(benchmark::State& state)
{
    grm::QuiverPresentation q{grm::Field::rationals(), grm::FgAbelianGroup(1), {"1"}, {{"x", 0, 0, grm::FgAbelianGroup(1).element({1})}}, {}};
    q.relations.push_back({{{grm::Scalar(1), {0, 0}}}});
    auto a = std::make_shared<const grm::GradedAlgebra>(grm::compile_quiver(q, 16));
    auto s = grm::share(grm::simple_module(a, 0, a->group().zero()));
    const auto cap = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(grm::minimal_resolution(s, cap).terms.size());
}

} // namespace

BENCHMARK(serial_q)->Arg(16)->Arg(48)->Arg(96);
BENCHMARK(parallel_q)->Arg(16)->Arg(48)->Arg(96);
BENCHMARK(serial_f101)->Arg(48)->Arg(128);
BENCHMARK(parallel_f101)->Arg(48)->Arg(128);
BENCHMARK(dual_numbers_resolution)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
