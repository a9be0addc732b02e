#include <benchmark/benchmark.h>

#include "phicoord/delta.hpp"
#include "phicoord/module.hpp"
#include "phicoord/substitution.hpp"

using namespace phicoord;

namespace {

Laurent generator()
{
    return Laurent::exact({{-2, Rat(1)}, {0, Rat(3)}, {1, Rat(-2)}, {3, Rat(1, 2)}});
}

void BM_FromGenerator(benchmark::State& state)
{
    const int z = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(from_generator(generator(), z));
    }
}
BENCHMARK(BM_FromGenerator)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_CheckAssociate(benchmark::State& state)
{
    const int z = static_cast<int>(state.range(0));
    const Associate phi = from_generator(generator(), z);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_associate(phi, z, z));
    }
}
BENCHMARK(BM_CheckAssociate)->Arg(4)->Arg(6)->Arg(8);

void BM_Conjugate(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const Associate phi = phi_n_closed_form(1, 6);
    const CoordinateChange f(TruncatedSeries::identity(order) +
                             TruncatedSeries::from_laurent(Laurent::monomial(Rat(1), 2), order));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjugate(phi, f));
    }
}
BENCHMARK(BM_Conjugate)->Arg(6)->Arg(10)->Arg(14);

void BM_SubstituteBivariate(benchmark::State& state)
{
    const std::vector<std::string> names{"x1", "x2"};
    MultiLaurent a(names);
    for (int i = -4; i <= 4; ++i) {
        a.add_term({i, -i, 0}, Rat(i + 5));
    }
    const Associate phi = phi_n_closed_form(-1 + static_cast<int>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(substitute_bivariate(a, phi.series));
    }
}
BENCHMARK(BM_SubstituteBivariate)->Arg(0)->Arg(1)->Arg(2);

void BM_DeltaIdentity(benchmark::State& state)
{
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_named_identity("phi1-proof", -w, w, 2));
    }
}
BENCHMARK(BM_DeltaIdentity)->Arg(6)->Arg(12)->Arg(24);

void BM_WqvaAxioms(benchmark::State& state)
{
    const VertexStructure v = make_vertex_algebra(truncated_polynomial(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_wqva_axioms(v, 4, 6));
    }
}
BENCHMARK(BM_WqvaAxioms)->Arg(3)->Arg(5)->Arg(8);

void BM_DualTheorem(benchmark::State& state)
{
    const VertexStructure v =
        state.range(0) == 0 ? make_vertex_algebra(grassmann2()) : make_vertex_algebra(truncated_polynomial(4));
    const ModuleInstance w = adjoint_module(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_dual_theorem(v, w, 2, 6, -12, 12, 2));
    }
}
BENCHMARK(BM_DualTheorem)->Arg(0)->Arg(1);

void BM_TransformModule(benchmark::State& state)
{
    const VertexStructure v = make_vertex_algebra(truncated_polynomial(5));
    const ModuleInstance w = adjoint_module(v);
    const int order = static_cast<int>(state.range(0));
    const CoordinateChange f(TruncatedSeries::identity(order) +
                             TruncatedSeries::from_laurent(Laurent::monomial(Rat(1), 2), order));
    for (auto _ : state) {
        benchmark::DoNotOptimize(transform_module(w, f));
    }
}
BENCHMARK(BM_TransformModule)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
