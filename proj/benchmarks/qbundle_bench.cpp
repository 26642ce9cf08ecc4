#include <benchmark/benchmark.h>

#include "qbundle/hopf.hpp"
#include "qbundle/obstruction.hpp"
#include "qbundle/presets.hpp"
#include "qbundle/pwfun.hpp"
#include "qbundle/winding.hpp"

namespace {

using namespace qbundle;

void BM_NormalForm(benchmark::State& state) {
    const PresPtr p = presets::suq2();
    const Element a = Element::generator(p, "alpha");
    const Element g = Element::generator(p, "gamma");
    const Element seed = a + a.star() + g + g.star();
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Element acc = Element::unit(p);
        for (int i = 0; i < degree; ++i) acc = acc * seed;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_HopfAxioms(benchmark::State& state) {
    const PresPtr p = presets::suq2();
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto bad = verify_hopf_axioms(p, degree);
        benchmark::DoNotOptimize(bad);
    }
}
BENCHMARK(BM_HopfAxioms)->Arg(2)->Arg(3);

void BM_Confluence(benchmark::State& state) {
    const PresPtr p = presets::suq2();
    for (auto _ : state) {
        auto report = p->check_local_confluence();
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Confluence);

void BM_FourierProject(benchmark::State& state) {
    S3Grid::Params params;
    const int n = static_cast<int>(state.range(0));
    params.n_eta = params.n_xi1 = params.n_xi2 = n;
    params.equator_samples = 64;
    const GridPtr grid = S3Grid::make(params);
    const SampledFunction a = coordinate_a(grid);
    for (auto _ : state) {
        SampledFunction p1 = fourier_weight_project(a, 1);
        benchmark::DoNotOptimize(p1);
    }
    state.SetItemsProcessed(state.iterations() * int64_t(grid->node_count()) *
                            grid->fiber_samples());
}
BENCHMARK(BM_FourierProject)->Arg(8)->Arg(16)->Arg(32);

void BM_Cleave(benchmark::State& state) {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 16;
    params.equator_samples = 64;
    const GridPtr grid = S3Grid::make(params);
    const MaskPtr mask = HemisphereMask::hemisphere(grid, HemisphereMask::Kind::A);
    for (auto _ : state) {
        SampledFunction j3 = cleave(3, mask);
        benchmark::DoNotOptimize(j3);
    }
}
BENCHMARK(BM_Cleave);

void BM_Winding(benchmark::State& state) {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 4;
    params.equator_samples = static_cast<int>(state.range(0));
    const GridPtr grid = S3Grid::make(params);
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CircleFunction t = transition_function(grid, samples);
        benchmark::DoNotOptimize(winding_number(t));
    }
}
BENCHMARK(BM_Winding)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
