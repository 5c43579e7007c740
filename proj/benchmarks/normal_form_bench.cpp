#include <benchmark/benchmark.h>

#include <thincoalg/normal_form.hpp>
#include <thincoalg/random.hpp>

using namespace thincoalg;

static void BM_NormalizeRandomTerms(benchmark::State& state) {
    const SignaturePtr sig = stock::server();
    Rng rng(42);
    TermGenOptions opts;
    opts.max_depth = static_cast<std::uint32_t>(state.range(0));
    std::vector<Term> corpus;
    for (int i = 0; i < 64; ++i) corpus.push_back(random_term(*sig, rng, opts));
    for (auto _ : state)
        for (const Term& t : corpus) benchmark::DoNotOptimize(normalize(sig, t));
}
BENCHMARK(BM_NormalizeRandomTerms)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ExtractNormalThin(benchmark::State& state) {
    const std::vector<std::size_t> arities{0, 1, 2, 3};
    const SignaturePtr sig = stock::polynomial(arities);
    Rng rng(7);
    CoalgebraGenOptions opts;
    opts.shape = CoalgebraGenOptions::Shape::thin;
    const PointedCoalgebra pc(random_coalgebra(sig, static_cast<std::size_t>(state.range(0)), rng, opts), 0);
    for (auto _ : state) benchmark::DoNotOptimize(extract_normal(pc));
}
BENCHMARK(BM_ExtractNormalThin)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);
