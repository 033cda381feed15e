#include <random>

#include <benchmark/benchmark.h>

#include "eulerloc/bundle_model.hpp"
#include "eulerloc/cochain.hpp"
#include "eulerloc/generators.hpp"
#include "eulerloc/harmonic.hpp"

using namespace eulerloc;

namespace {

BundleData fixture(int which)
{
    switch (which) {
    case 0: return hopf_fixture();
    case 1: return gen_trivial(named_base("torus7"), named_fiber("cycle4"), 3);
    default: return gen_trivial(named_base("boundary4"), named_fiber("boundary3"), 1);
    }
}

const char* fixture_name(int which)
{
    static const char* names[] = {"hopf", "torus7 x cycle4", "boundary4 x boundary3"};
    return names[which];
}

// Boundary of a random top chain, so always extendable.
RationalChain exact_chain(const CellComplex& complex, int k, std::mt19937_64& rng)
{
    RationalChain out(complex, k);
    for (CellId c : complex.cells(k + 1)) {
        if (rng() % 2)
            continue;
        const Rational coeff(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 3));
        for (const auto& f : complex.faces(c))
            out.add(f.cell, f.sign * coeff);
    }
    return out;
}

void BM_BundleModel(benchmark::State& state)
{
    const TriangulatedBundle bundle(fixture(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        BundleModel model(bundle);
        benchmark::DoNotOptimize(model.refinement_count());
    }
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BundleModel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_HarmonicFactor(benchmark::State& state)
{
    const TriangulatedBundle bundle(fixture(static_cast<int>(state.range(0))));
    const BundleModel model(bundle);
    const auto& g = model.face(model.top_simplices().front()).dual.complex;
    for (auto _ : state) {
        HarmonicExtender ext(g, g.top_dim() - 1);
        benchmark::DoNotOptimize(&ext);
    }
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HarmonicFactor)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_HarmonicSolve(benchmark::State& state)
{
    const TriangulatedBundle bundle(fixture(static_cast<int>(state.range(0))));
    const BundleModel model(bundle);
    const auto& g = model.face(model.top_simplices().front()).dual.complex;
    const HarmonicExtender ext(g, g.top_dim() - 1);
    std::mt19937_64 rng(1);
    const auto a = exact_chain(g, g.top_dim() - 1, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(ext.extend(a));
    state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HarmonicSolve)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Cochain(benchmark::State& state)
{
    const TriangulatedBundle bundle(fixture(static_cast<int>(state.range(0))));
    const BundleModel model(bundle);
    const auto formula = state.range(1) == 0 ? Formula::Harmonic : Formula::Winding;
    const auto jobs = static_cast<std::size_t>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(euler_cochain(model, formula, jobs));
    state.SetLabel(std::string(fixture_name(static_cast<int>(state.range(0)))) + ", " +
                   std::string(formula_name(formula)));
}
BENCHMARK(BM_Cochain)->ArgsProduct({{0, 1, 2}, {0, 1}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
