#include <benchmark/benchmark.h>

#include "hsbs/eval.hpp"
#include "hsbs/selection.hpp"
#include "hsbs/synthetic.hpp"

namespace {

const hsbs::SyntheticDataset& dataset() {
    static const hsbs::SyntheticDataset ds = [] {
        hsbs::SyntheticSpec spec;
        spec.width = spec.height = 100;
        spec.n_classes = 8;
        spec.n_informative = 10;
        spec.n_redundant = 20;
        spec.n_noise = 30;
        spec.synergy_pairs = 2;
        spec.noise_sigma = 5.0;
        return hsbs::generate_synthetic(spec);
    }();
    return ds;
}

void BM_Select(benchmark::State& state) {
    const auto& ds = dataset();
    hsbs::SelectionConfig config;
    config.algorithm = state.range(0) == 0 ? hsbs::Algorithm::mi_filter : hsbs::Algorithm::tmi_filter;
    config.k_max = 20;
    config.threshold_th = -0.02;
    for (auto _ : state) benchmark::DoNotOptimize(hsbs::select_bands(ds.cube, ds.gt, config));
}
BENCHMARK(BM_Select)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Knn(benchmark::State& state) {
    const auto& ds = dataset();
    const auto split = hsbs::split(ds.gt, {});
    std::vector<std::size_t> bands(static_cast<std::size_t>(state.range(0)));
    for (std::size_t b = 0; b < bands.size(); ++b) bands[b] = b;
    for (auto _ : state) benchmark::DoNotOptimize(hsbs::classify_knn(ds.cube, ds.gt, bands, split, 3));
}
BENCHMARK(BM_Knn)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
