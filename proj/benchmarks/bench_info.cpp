#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hsbs/info.hpp"

namespace {

hsbs::CodedVariable random_codes(std::size_t n, std::uint32_t alphabet, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<std::uint32_t> codes(n);
    for (auto& c : codes) c = gen() % alphabet;
    return hsbs::CodedVariable(std::move(codes), alphabet);
}

// 10366 samples: the labeled pixel count of the Indian Pines scene.
constexpr std::size_t kSamples = 10366;

void BM_Entropy(benchmark::State& state) {
    const auto x = random_codes(kSamples, static_cast<std::uint32_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(hsbs::entropy(x));
    state.SetItemsProcessed(state.iterations() * kSamples);
}
BENCHMARK(BM_Entropy)->Arg(16)->Arg(256);

void BM_MutualInfo(benchmark::State& state) {
    const auto band = random_codes(kSamples, static_cast<std::uint32_t>(state.range(0)), 2);
    const auto gt = random_codes(kSamples, 16, 3);
    for (auto _ : state) benchmark::DoNotOptimize(hsbs::mutual_info(band, gt));
    state.SetItemsProcessed(state.iterations() * kSamples);
}
BENCHMARK(BM_MutualInfo)->Arg(16)->Arg(256);

void BM_InteractionInfo(benchmark::State& state) {
    const auto alphabet = static_cast<std::uint32_t>(state.range(0));
    const auto est = random_codes(kSamples, 16, 4);
    const auto band = random_codes(kSamples, alphabet, 5);
    const auto gt = random_codes(kSamples, 16, 6);
    for (auto _ : state) benchmark::DoNotOptimize(hsbs::interaction_info(est, band, gt));
    state.SetItemsProcessed(state.iterations() * kSamples);
}
// 256 x 16 x 16 cells is dense; 65536 exceeds the dense limit and uses the sort path.
BENCHMARK(BM_InteractionInfo)->Arg(16)->Arg(256)->Arg(65536);

}  // namespace
