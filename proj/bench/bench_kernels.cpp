// Serial reference vs OpenMP for the two batch kernels.

#include <benchmark/benchmark.h>

#include "restab/kernels.hpp"
#include "restab/synth.hpp"

namespace {

using namespace restab;

struct DrawRssFixture {
    std::vector<Theta> draws;
    std::vector<SplitPanel> panels;

    explicit DrawRssFixture(int n_draws) {
        SynthConfig cfg;
        const auto corpus = summarize_all(generate(cfg)).accepted;
        for (int u = 20; u <= 45; u += 5) panels.push_back(build_panel(corpus, u));
        Rng rng = Rng::stream(1, 0);
        for (int i = 0; i < n_draws; ++i) draws.push_back(sample_prior(PriorSpec{}, rng));
    }
};

void BM_DrawRss(benchmark::State& state, Exec exec) {
    const DrawRssFixture f(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = exec == Exec::Serial ? kernels::serial::draw_rss(f.draws, f.panels)
                                      : kernels::parallel::draw_rss(f.draws, f.panels);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SynthGenerate(benchmark::State& state, Exec exec) {
    SynthConfig cfg;
    cfg.n_matches = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = generate(cfg, exec);
        benchmark::DoNotOptimize(m.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_DrawRss, serial, Exec::Serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DrawRss, parallel, Exec::Parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SynthGenerate, serial, Exec::Serial)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SynthGenerate, parallel, Exec::Parallel)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
