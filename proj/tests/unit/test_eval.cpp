#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hsbs/error.hpp"
#include "hsbs/eval.hpp"
#include "hsbs/synthetic.hpp"
#include "oracle.hpp"

using namespace hsbs;

namespace {

FeatureMatrix matrix(const std::vector<std::vector<double>>& rows) {
    FeatureMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    return m;
}

Split all_train_but(std::size_t n, std::vector<std::size_t> test) {
    Split s{std::vector<bool>(n, true), std::vector<bool>(n, false)};
    for (std::size_t t : test) {
        s.train_mask[t] = false;
        s.test_mask[t] = true;
    }
    return s;
}

SyntheticSpec single_informative(std::size_t classes) {
    SyntheticSpec spec;
    spec.width = spec.height = 16;
    spec.n_classes = classes;
    spec.n_informative = 1;
    spec.n_redundant = 0;
    spec.n_noise = 1;
    spec.noise_sigma = 0.0;
    return spec;
}

}  // namespace

TEST(Split, SingleClassHalves) {
    const GroundTruth gt(2, 2, {1, 1, 1, 1});
    const Split s = split(gt, {0.5, 3, true});
    EXPECT_EQ(s.train_indices().size(), 2u);
    EXPECT_EQ(s.test_indices().size(), 2u);
    EXPECT_EQ(s, split(gt, {0.5, 3, true}));
}

TEST(Split, DisjointExhaustiveAndStratified) {
    std::mt19937 gen(8);
    std::vector<int> labels(30 * 20);
    for (auto& l : labels) l = static_cast<int>(gen() % 6);  // 0 = unlabeled
    const GroundTruth gt(30, 20, labels);
    for (double f : {0.5, 0.3, 0.77}) {
        const Split s = split(gt, {f, 5, true});
        ASSERT_EQ(s.train_mask.size(), gt.labeled_count());
        std::map<int, std::pair<std::size_t, std::size_t>> counts;
        const auto pixels = gt.labeled_pixels();
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            ASSERT_NE(s.train_mask[i], s.test_mask[i]);
            auto& c = counts[gt.labels()[pixels[i]]];
            ++(s.train_mask[i] ? c.first : c.second);
        }
        for (const auto& [label, c] : counts) {
            const double n = static_cast<double>(c.first + c.second);
            EXPECT_LE(std::abs(static_cast<double>(c.first) - f * n), 1.0) << "class " << label;
        }
    }
    EXPECT_NE(split(gt, {0.5, 5, true}), split(gt, {0.5, 6, true}));
    const Split pooled = split(gt, {0.5, 5, false});
    EXPECT_EQ(pooled.train_indices().size(), (gt.labeled_count() + 1) / 2);
}

TEST(Split, Errors) {
    const GroundTruth gt(3, 1, {1, 1, 2});
    try {
        split(gt, {0.5, 0, true});
        FAIL();
    } catch (const DegenerateClassError& e) {
        EXPECT_EQ(e.label(), 2);
    }
    EXPECT_NO_THROW(split(gt, {0.5, 0, false}));
    EXPECT_THROW(split(gt, {0.0, 0, false}), ContractError);
    EXPECT_THROW(split(gt, {1.0, 0, false}), ContractError);
}

TEST(Knn, Examples) {
    const auto train = matrix({{0.0}, {0.5}, {1.0}});
    const std::vector<int> labels{3, 1, 2};
    EXPECT_EQ(knn_predict(train, labels, matrix({{0.5}, {0.9}}), 1), (std::vector<int>{1, 2}));
    // A three-way tie in the vote goes to the smallest label.
    EXPECT_EQ(knn_predict(train, labels, matrix({{0.5}}), 3), (std::vector<int>{1}));
    const std::vector<int> same{4, 4, 4};
    EXPECT_EQ(knn_predict(train, same, matrix({{0.1}, {7.0}}), 2), (std::vector<int>{4, 4}));
    EXPECT_THROW(knn_predict(train, labels, matrix({{0.1}}), 0), ContractError);
}

TEST(Knn, MatchesBruteForceOracle) {
    std::mt19937 gen(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n_train = 1 + gen() % 120;
        const std::size_t n_test = 1 + gen() % 80;
        const std::size_t dims = 1 + gen() % 4;
        const std::size_t k = 1 + gen() % 7;
        // Few distinct levels so distance and vote ties are common.
        std::uniform_int_distribution<int> level(0, 3);
        std::uniform_int_distribution<int> label(1, 4);
        std::vector<std::vector<double>> tr(n_train, std::vector<double>(dims)), te(n_test, std::vector<double>(dims));
        std::vector<int> labels(n_train);
        for (auto& row : tr)
            for (auto& x : row) x = level(gen) / 3.0;
        for (auto& row : te)
            for (auto& x : row) x = level(gen) / 3.0;
        for (auto& l : labels) l = label(gen);
        ASSERT_EQ(knn_predict(matrix(tr), labels, matrix(te), k), oracle::knn(tr, labels, te, k)) << trial;
    }
}

TEST(Knn, SingleNoiselessBandIsPerfect) {
    const auto ds = generate_synthetic(single_informative(2));
    const Split s = split(ds.gt, {0.5, 1, true});
    const std::vector<std::size_t> bands{0};
    const auto predicted = classify_knn(ds.cube, ds.gt, bands, s, 3);
    std::vector<int> truth;
    for (std::size_t i : s.test_indices()) truth.push_back(ds.gt.labels()[ds.gt.labeled_pixels()[i]]);
    EXPECT_EQ(accuracy(predicted, truth), 100.0);
    EXPECT_THROW(classify_knn(ds.cube, ds.gt, {}, s, 3), ContractError);
}

TEST(Features, TrainRangeNormalizationWithClamp) {
    const HyperCube cube(4, 1, 1, {10, 20, 0, 40});
    const GroundTruth gt(4, 1, {1, 2, 1, 2});
    const FeatureSet fs = build_features(cube, gt, std::vector<std::size_t>{0}, all_train_but(4, {2, 3}));
    EXPECT_EQ(fs.train.row(0)[0], 0.0);
    EXPECT_EQ(fs.train.row(1)[0], 1.0);
    EXPECT_EQ(fs.test.row(0)[0], 0.0);
    EXPECT_EQ(fs.test.row(1)[0], 1.0);
    EXPECT_EQ(fs.test_pixels, (std::vector<std::size_t>{2, 3}));
}

TEST(Accuracy, Examples) {
    const std::vector<int> truth{1, 2, 3, 4};
    EXPECT_EQ(accuracy(truth, truth), 100.0);
    EXPECT_EQ(accuracy(std::vector<int>{2, 3, 4, 1}, truth), 0.0);
    EXPECT_EQ(accuracy(std::vector<int>{1, 2, 3, 1}, truth), 75.0);
    EXPECT_THROW(accuracy(std::vector<int>{}, std::vector<int>{}), ContractError);
    EXPECT_THROW(accuracy(std::vector<int>{1}, truth), ContractError);
    // Class 1 recall 1/3, class 2 recall 1.
    EXPECT_NEAR(mean_class_accuracy(std::vector<int>{1, 2, 2, 2}, std::vector<int>{1, 1, 1, 2}), 200.0 / 3, 1e-12);
}

TEST(Accuracy, PermutationInvariant) {
    std::mt19937 gen(4);
    std::vector<int> p(60), t(60);
    for (auto& x : p) x = 1 + static_cast<int>(gen() % 4);
    for (auto& x : t) x = 1 + static_cast<int>(gen() % 4);
    const double base = accuracy(p, t);
    std::vector<std::size_t> order(60);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    std::vector<int> p2, t2;
    for (std::size_t i : order) {
        p2.push_back(p[i]);
        t2.push_back(t[i]);
    }
    EXPECT_EQ(accuracy(p2, t2), base);
}

TEST(Sweep, SingleInformativeBandOneRow) {
    const auto ds = generate_synthetic(single_informative(3));
    SelectionConfig config;
    const std::vector<std::size_t> sizes{1};
    const auto report = sweep(ds.cube, ds.gt, config, sizes, {}, {});
    ASSERT_EQ(report.rows.size(), 1u);
    EXPECT_EQ(report.rows[0].accuracy_percent, 100.0);
    EXPECT_EQ(report.rows[0].selected_bands, (std::vector<std::size_t>{0}));
}

TEST(Sweep, ShortfallReportsAvailableCount) {
    SyntheticSpec spec;
    spec.width = spec.height = 16;
    const auto ds = generate_synthetic(spec);
    SelectionConfig config;
    config.algorithm = Algorithm::mi_filter;
    config.threshold_th = 1e9;
    const std::vector<std::size_t> sizes{2, 3};
    const auto report = sweep(ds.cube, ds.gt, config, sizes, {}, {});
    ASSERT_EQ(report.rows.size(), 1u);
    EXPECT_EQ(report.rows[0].n_bands, 1u);
    EXPECT_EQ(report.rows[0].requested, 2u);
    EXPECT_TRUE(report.rows[0].shortfall);
    ASSERT_EQ(report.shortfalls.size(), 2u);
    EXPECT_EQ(report.shortfalls[1].requested, 3u);
    EXPECT_EQ(report.shortfalls[1].available, 1u);
}

TEST(Sweep, SizeValidation) {
    SyntheticSpec spec;
    spec.width = spec.height = 8;
    const auto ds = generate_synthetic(spec);
    const SelectionConfig config;
    EXPECT_THROW(sweep(ds.cube, ds.gt, config, std::vector<std::size_t>{3, 2}, {}, {}), ContractError);
    EXPECT_THROW(sweep(ds.cube, ds.gt, config, std::vector<std::size_t>{0}, {}, {}), ContractError);
    EXPECT_THROW(sweep(ds.cube, ds.gt, config, std::vector<std::size_t>{ds.cube.n_bands() + 1}, {}, {}),
                 ContractError);
}

TEST(Sweep, ReportCsvLayout) {
    EvalReport r;
    r.rows.push_back({Algorithm::tmi_filter, 2, 2, 87.5, {4, 0}, false});
    EXPECT_EQ(format_report_csv(r), "algorithm,n_bands,accuracy_percent,selected_bands\ntmi_filter,2,87.5000,5|1\n");
}

TEST(Sweep, NoiselessInformativeBandsNeverHurt) {
    SyntheticSpec spec;
    spec.width = spec.height = 16;
    spec.n_informative = 4;
    spec.n_redundant = 0;
    spec.n_noise = 0;
    spec.noise_sigma = 0.0;
    const auto ds = generate_synthetic(spec);
    const Split s = split(ds.gt, {});
    double prev = -1;
    std::vector<std::size_t> bands;
    for (std::size_t b = 0; b < 4; ++b) {
        bands.push_back(b);
        const auto pred = classify_knn(ds.cube, ds.gt, bands, s, 3);
        std::vector<int> truth;
        for (std::size_t i : s.test_indices()) truth.push_back(ds.gt.labels()[ds.gt.labeled_pixels()[i]]);
        const double acc = accuracy(pred, truth);
        EXPECT_GE(acc, prev);
        prev = acc;
    }
}

TEST(ClassifyMap, PerfectAndEmptyTest) {
    const auto ds = generate_synthetic(single_informative(4));
    const std::vector<std::size_t> bands{0};
    const Split s = split(ds.gt, {});
    EXPECT_EQ(classify_map(ds.cube, ds.gt, bands, s, {}), ds.gt.grid());

    std::vector<int> labels = ds.gt.grid().labels;
    labels[0] = 0;
    const GroundTruth partial(ds.gt.width(), ds.gt.height(), labels);
    const std::size_t n = partial.labeled_count();
    const Split none{std::vector<bool>(n, true), std::vector<bool>(n, false)};
    EXPECT_EQ(classify_map(ds.cube, partial, bands, none, {}), partial.grid());
}

TEST(Export, FeatureTables) {
    const HyperCube cube(3, 1, 2, {0, 10, 5, 1, 1, 1});
    const GroundTruth gt(3, 1, {1, 2, 1});
    const FeatureSet fs = build_features(cube, gt, std::vector<std::size_t>{1, 0}, all_train_but(3, {2}));
    const auto out = export_features(fs);
    EXPECT_EQ(out.train_csv, "pixel_id,label,b2,b1\n0,1,0,0\n1,2,0,1\n");
    EXPECT_EQ(out.test_csv, "pixel_id,label,b2,b1\n2,1,0,0.5\n");
    EXPECT_EQ(parse_metric("mean_per_class"), AccuracyMetric::mean_per_class);
    EXPECT_THROW(parse_metric("kappa"), FormatError);
}
