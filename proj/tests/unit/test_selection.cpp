#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "fixtures.hpp"
#include "hsbs/error.hpp"
#include "hsbs/info.hpp"
#include "hsbs/selection.hpp"
#include "hsbs/synthetic.hpp"
#include "oracle.hpp"

using namespace hsbs;
using fixtures::as_vector;

namespace {

HyperCube cube_from_bands(std::size_t w, std::size_t h, const std::vector<std::vector<double>>& bands) {
    std::vector<double> values;
    for (const auto& b : bands) values.insert(values.end(), b.begin(), b.end());
    return HyperCube(w, h, bands.size(), std::move(values));
}

// Informative set with band `dup_of` copied verbatim onto a new last band.
SyntheticDataset with_duplicate(const SyntheticSpec& spec, std::size_t dup_of) {
    const auto ds = generate_synthetic(spec);
    std::vector<double> values = ds.cube.values();
    const auto src = ds.cube.band(dup_of);
    values.insert(values.end(), src.begin(), src.end());
    return {HyperCube(ds.cube.width(), ds.cube.height(), ds.cube.n_bands() + 1, std::move(values)), ds.gt};
}

SyntheticSpec small_spec(std::uint64_t seed) {
    SyntheticSpec spec;
    spec.width = spec.height = 24;
    spec.n_classes = 3;
    spec.n_informative = 3;
    spec.n_redundant = 2;
    spec.n_noise = 3;
    spec.noise_sigma = 6.0;
    spec.synergy_pairs = 1;
    spec.seed = seed;
    return spec;
}

const DiscretizationConfig kEstimateCoding{2, BinningStrategy::gt_range};

}  // namespace

TEST(Ranking, NoiselessRecodingRankedFirst) {
    const GroundTruth gt(4, 2, {1, 2, 3, 4, 4, 3, 2, 1});
    std::vector<double> noise{5, 5, 6, 6, 5, 6, 5, 6};
    std::vector<double> recode(8);
    for (std::size_t i = 0; i < 8; ++i) recode[i] = 3.0 * gt.labels()[i];
    const auto cube = cube_from_bands(4, 2, {noise, noise, recode});
    const auto ranking = rank_bands_by_mi(cube, gt, {});
    EXPECT_EQ(ranking.front().band, 2u);
    EXPECT_NEAR(ranking.front().mi_bits, entropy(gt_codes(gt)), 1e-12);
    // Identical bands tie; the lower index comes first.
    EXPECT_EQ(ranking[1].band, 0u);
    EXPECT_EQ(ranking[2].band, 1u);
}

TEST(Ranking, InformativeBeatsNoiseAndMatchesOracle) {
    SyntheticSpec spec;
    spec.width = spec.height = 20;
    spec.n_informative = 1;
    spec.n_redundant = 0;
    spec.n_noise = 6;
    spec.noise_sigma = 3.0;
    spec.seed = 7;
    const auto ds = generate_synthetic(spec);
    const DiscretizationConfig disc{32, BinningStrategy::min_max_uniform};
    const auto ranking = rank_bands_by_mi(ds.cube, ds.gt, disc);
    EXPECT_EQ(ranking.front().band, 0u);
    const auto truth = as_vector(gt_codes(ds.gt));
    for (const BandScore& s : ranking) {
        const auto codes = as_vector(discretize_band(ds.cube, s.band, ds.gt, disc));
        EXPECT_NEAR(s.mi_bits, oracle::mutual_info_direct(codes, truth), 1e-12);
    }
}

TEST(Estimate, InitExamples) {
    const GroundTruth gt(3, 1, {1, 2, 3});
    const auto cube = cube_from_bands(3, 1, {{1, 2, 3}, {4, 4, 4}, {9, -2, 40}});
    const auto truth = gt_codes(gt);
    EXPECT_NEAR(mutual_info(init_estimate(cube, gt, 0).codes, truth), entropy(truth), 1e-12);
    const auto flat = init_estimate(cube, gt, 1);
    EXPECT_EQ(as_vector(flat.codes), (std::vector<std::uint32_t>{0, 0, 0}));
    EXPECT_EQ(mutual_info(flat.codes, truth), 0.0);
    const auto other = init_estimate(cube, gt, 2);
    EXPECT_EQ(other.codes.alphabet_size(), 3u);
    for (auto c : other.codes.codes()) EXPECT_LE(c, 2u);
}

TEST(Estimate, UpdateRounding) {
    const GtEstimate est{fixtures::coded({0, 1, 2, 1}, 3)};
    const auto next = update_estimate(est, fixtures::coded({2, 2, 2, 1}, 3));
    EXPECT_EQ(as_vector(next.codes), (std::vector<std::uint32_t>{1, 2, 2, 1}));
    EXPECT_EQ(as_vector(update_estimate(est, est.codes).codes), as_vector(est.codes));
    EXPECT_THROW(update_estimate(est, fixtures::coded({0, 0, 0, 0}, 4)), ContractError);
    EXPECT_THROW(update_estimate(est, fixtures::coded({0, 0, 0}, 3)), ContractError);
}

TEST(Estimate, StaysInAlphabet) {
    std::mt19937 gen(3);
    GtEstimate est{fixtures::random_coded(gen, 50, 5)};
    for (int i = 0; i < 40; ++i) {
        est = update_estimate(est, fixtures::random_coded(gen, 50, 5));
        for (auto c : est.codes.codes()) ASSERT_LT(c, 5u);
    }
}

TEST(MiFilter, HugeThresholdKeepsOnlyInitialBand) {
    const auto ds = generate_synthetic(small_spec(1));
    SelectionConfig config;
    config.algorithm = Algorithm::mi_filter;
    config.k_max = ds.cube.n_bands();
    config.threshold_th = 1e9;
    const auto result = select_mi_filter(ds.cube, ds.gt, config);
    ASSERT_EQ(result.selected.size(), 1u);
    EXPECT_EQ(result.selected.front(), result.ranking.front().band);
    EXPECT_EQ(result.trace.size(), ds.cube.n_bands());
}

TEST(MiFilter, RejectsDuplicateOfSelectedBand) {
    SyntheticSpec spec = small_spec(2);
    spec.n_redundant = 0;
    spec.synergy_pairs = 0;
    const auto base = generate_synthetic(spec);
    const std::size_t top = rank_bands_by_mi(base.cube, base.gt, {}).front().band;
    const auto ds = with_duplicate(spec, top);
    const std::size_t dup = ds.cube.n_bands() - 1;

    SelectionConfig config;
    config.algorithm = Algorithm::mi_filter;
    config.k_max = ds.cube.n_bands();
    const auto result = select_mi_filter(ds.cube, ds.gt, config);
    EXPECT_EQ(result.selected.front(), top);
    bool seen = false;
    for (const TraceEntry& t : result.trace) {
        if (t.band != dup) continue;
        seen = true;
        EXPECT_LE(t.score_bits, 0.0);
        EXPECT_FALSE(t.accepted);
    }
    EXPECT_TRUE(seen);
}

TEST(TmiFilter, DuplicateOfEstimateScoresMinusMi) {
    const auto ds = generate_synthetic(small_spec(3));
    const auto truth = gt_codes(ds.gt);
    const std::size_t top = rank_bands_by_mi(ds.cube, ds.gt, {}).front().band;
    const auto est = init_estimate(ds.cube, ds.gt, top);
    EXPECT_NEAR(interaction_info(est.codes, est.codes, truth), -mutual_info(est.codes, truth), 1e-12);
}

TEST(TmiFilter, XorPartnerFollowsFirstSynergyBand) {
    SyntheticSpec spec;
    spec.width = spec.height = 16;
    spec.n_classes = 2;
    spec.n_informative = 0;
    spec.n_redundant = 0;
    spec.n_noise = 3;
    spec.synergy_pairs = 1;
    spec.noise_sigma = 0.0;
    const auto ds = generate_synthetic(spec);
    SelectionConfig config;
    config.k_max = 2;
    const auto result = select_tmi_filter(ds.cube, ds.gt, config);
    // Every band has MI 0, so the first pick is band 0; its XOR partner is band 1.
    EXPECT_EQ(result.selected, (std::vector<std::size_t>{0, 1}));
    EXPECT_NEAR(result.trace[1].score_bits, 1.0, 1e-12);
    EXPECT_EQ(result.trace[1].kind, ScoreKind::i3);
}

TEST(TmiFilter, KMaxOneIsTopBand) {
    const auto ds = generate_synthetic(small_spec(4));
    SelectionConfig config;
    config.k_max = 1;
    const auto result = select_tmi_filter(ds.cube, ds.gt, config);
    ASSERT_EQ(result.selected.size(), 1u);
    EXPECT_EQ(result.selected.front(), result.ranking.front().band);
    ASSERT_EQ(result.trace.size(), 1u);
    EXPECT_EQ(result.trace.front().step, 0u);
}

TEST(Selection, KMaxValidation) {
    const auto ds = generate_synthetic(small_spec(5));
    SelectionConfig config;
    config.k_max = 0;
    EXPECT_THROW(select_bands(ds.cube, ds.gt, config), ContractError);
    config.k_max = ds.cube.n_bands() + 1;
    EXPECT_THROW(select_bands(ds.cube, ds.gt, config), ContractError);
    config.algorithm = Algorithm::mi_filter;
    EXPECT_THROW(select_bands(ds.cube, ds.gt, config), ContractError);
}

TEST(Selection, DeterministicAndPrefixClosed) {
    const auto ds = generate_synthetic(small_spec(6));
    for (Algorithm alg : {Algorithm::mi_filter, Algorithm::tmi_filter}) {
        SelectionConfig config;
        config.algorithm = alg;
        config.threshold_th = -0.02;
        config.k_max = ds.cube.n_bands();
        const auto full = select_bands(ds.cube, ds.gt, config);
        EXPECT_EQ(full, select_bands(ds.cube, ds.gt, config));
        for (std::size_t k = 1; k <= full.selected.size(); ++k) {
            config.k_max = k;
            const auto part = select_bands(ds.cube, ds.gt, config);
            ASSERT_EQ(part.selected.size(), k);
            EXPECT_TRUE(std::equal(part.selected.begin(), part.selected.end(), full.selected.begin()));
        }
    }
}

TEST(Selection, TraceReplayIsSound) {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        const auto ds = generate_synthetic(small_spec(seed));
        const auto truth = as_vector(gt_codes(ds.gt));
        std::vector<std::vector<std::uint32_t>> coded;
        for (std::size_t b = 0; b < ds.cube.n_bands(); ++b)
            coded.push_back(as_vector(discretize_band(ds.cube, b, ds.gt, kEstimateCoding)));
        const std::uint32_t alphabet = static_cast<std::uint32_t>(ds.gt.n_classes());

        SelectionConfig config;
        config.k_max = ds.cube.n_bands();
        config.threshold_th = 0.0;

        config.algorithm = Algorithm::mi_filter;
        const auto mi = select_mi_filter(ds.cube, ds.gt, config);
        auto est = coded[mi.selected.front()];
        double prev = oracle::mutual_info_direct(truth, est);
        for (std::size_t i = 1; i < mi.trace.size(); ++i) {
            const TraceEntry& t = mi.trace[i];
            std::vector<std::uint32_t> next(est.size());
            for (std::size_t p = 0; p < est.size(); ++p) next[p] = (est[p] + coded[t.band][p] + 1) / 2;
            const double now = oracle::mutual_info_direct(truth, next);
            ASSERT_NEAR(t.score_bits, now - prev, 1e-12);
            ASSERT_EQ(t.accepted, t.score_bits > config.threshold_th);
            if (t.accepted) {
                ASSERT_GE(now, prev - 1e-12);
                est = next;
                prev = now;
            }
        }

        config.algorithm = Algorithm::tmi_filter;
        const auto tmi = select_tmi_filter(ds.cube, ds.gt, config);
        est = coded[tmi.selected.front()];
        std::vector<bool> taken(ds.cube.n_bands(), false);
        taken[tmi.selected.front()] = true;
        for (std::size_t i = 1; i < tmi.trace.size(); ++i) {
            const TraceEntry& t = tmi.trace[i];
            std::size_t best = ds.cube.n_bands();
            double best_score = -std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < ds.cube.n_bands(); ++b) {
                if (taken[b]) continue;
                const double s = oracle::interaction_info(est, coded[b], truth);
                if (s > best_score + 1e-12) {
                    best = b;
                    best_score = s;
                }
            }
            ASSERT_EQ(t.band, best) << "step " << i;
            ASSERT_NEAR(t.score_bits, best_score, 1e-12);
            taken[best] = true;
            for (std::size_t p = 0; p < est.size(); ++p) est[p] = (est[p] + coded[best][p] + 1) / 2;
            for (auto c : est) ASSERT_LT(c, alphabet);
        }
    }
}

TEST(Selection, CsvLayout) {
    SelectionResult r;
    r.trace = {{0, 4, 1.5, ScoreKind::mi_gain, true}, {1, 0, -0.25, ScoreKind::mi_gain, false}};
    EXPECT_EQ(format_selection_csv(r),
              "step,band,score_bits,score_kind,accepted\n0,5,1.5,mi_gain,1\n1,1,-0.25,mi_gain,0\n");
    EXPECT_EQ(parse_algorithm("TMI"), Algorithm::tmi_filter);
    EXPECT_EQ(parse_algorithm("mi_filter"), Algorithm::mi_filter);
    EXPECT_THROW(parse_algorithm("svm"), FormatError);
}
