#include <benchmark/benchmark.h>

#include <thincoalg/random.hpp>
#include <thincoalg/thinness.hpp>

using namespace thincoalg;

namespace {

SignaturePtr arities_0_to_6() {
    static const std::vector<std::size_t> arities{0, 1, 2, 3, 4, 5, 6};
    static const SignaturePtr sig = stock::polynomial(arities);
    return sig;
}

PointedCoalgebra random_pc(std::size_t states, double mean_degree) {
    Rng rng(10010);
    CoalgebraGenOptions opts;
    opts.mean_degree = mean_degree;
    return PointedCoalgebra(random_coalgebra(arities_0_to_6(), states, rng, opts), 0);
}

PointedCoalgebra thin_pc(std::size_t states) {
    Rng rng(20020);
    CoalgebraGenOptions opts;
    opts.shape = CoalgebraGenOptions::Shape::thin;
    return PointedCoalgebra(random_coalgebra(arities_0_to_6(), states, rng, opts), 0);
}

} // namespace

static void BM_IsThinRandom(benchmark::State& state) {
    const PointedCoalgebra pc = random_pc(static_cast<std::size_t>(state.range(0)), 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(is_thin(pc));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsThinRandom)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

static void BM_IsThinThinShape(benchmark::State& state) {
    const PointedCoalgebra pc = thin_pc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_thin(pc));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsThinThinShape)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

static void BM_Minimize(benchmark::State& state) {
    const PointedCoalgebra pc = thin_pc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(minimize(pc));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
