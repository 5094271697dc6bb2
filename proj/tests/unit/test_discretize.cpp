#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "hsbs/discretize.hpp"
#include "hsbs/error.hpp"

using namespace hsbs;
using fixtures::as_vector;

TEST(Quantize, Examples) {
    const std::vector<double> ends{0, 255};
    EXPECT_EQ(as_vector(quantize_uniform(ends, 256)), (std::vector<std::uint32_t>{0, 255}));
    const std::vector<double> three{10, 20, 30};
    EXPECT_EQ(as_vector(quantize_uniform(three, 2)), (std::vector<std::uint32_t>{0, 1, 1}));
}

TEST(Quantize, ConstantInputIsAllZero) {
    const std::vector<double> flat(5, 3.25);
    const auto codes = quantize_uniform(flat, 16);
    EXPECT_EQ(as_vector(codes), std::vector<std::uint32_t>(5, 0));
    EXPECT_EQ(codes.alphabet_size(), 16u);
}

TEST(Quantize, MonotoneAndInRange) {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> pick(-50, 50);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(40);
        for (auto& x : v) x = pick(gen);
        const std::uint32_t levels = 2 + gen() % 30;
        const auto codes = quantize_uniform(v, levels);
        for (std::size_t i = 0; i < v.size(); ++i) {
            ASSERT_LT(codes[i], levels);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[i] <= v[j]) ASSERT_LE(codes[i], codes[j]);
        }
    }
}

TEST(DiscretizeBand, UsesLabeledPixelsOnly) {
    // The unlabeled pixel's extreme value must not stretch the range.
    const HyperCube cube(2, 2, 1, {1000, 10, 20, 30});
    const GroundTruth gt(2, 2, {0, 1, 1, 2});
    const auto codes = discretize_band(cube, 0, gt, {2, BinningStrategy::min_max_uniform});
    EXPECT_EQ(as_vector(codes), (std::vector<std::uint32_t>{0, 1, 1}));
}

TEST(DiscretizeBand, GtRangeUsesClassCount) {
    const HyperCube cube(3, 1, 1, {0, 5, 10});
    const GroundTruth gt(3, 1, {1, 2, 3});
    const auto codes = discretize_band(cube, 0, gt, {256, BinningStrategy::gt_range});
    EXPECT_EQ(codes.alphabet_size(), 3u);
    EXPECT_EQ(as_vector(codes), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(DiscretizeBand, Errors) {
    const HyperCube cube(2, 1, 1, {0, 1});
    const GroundTruth gt(2, 1, {1, 1});
    EXPECT_THROW(discretize_band(cube, 0, gt, {1, BinningStrategy::min_max_uniform}), ContractError);
    EXPECT_THROW(discretize_band(cube, 1, gt, {}), ContractError);
    const GroundTruth other(1, 2, {1, 1});
    EXPECT_THROW(discretize_band(cube, 0, other, {}), DimensionError);
}

TEST(GtCodes, RemapsLabelsOverLabeledPixels) {
    const auto grid = parse_label_grid("1 2\n0 2\n");
    const GroundTruth gt(grid.width, grid.height, grid.labels);
    const auto codes = gt_codes(gt);
    EXPECT_EQ(as_vector(codes), (std::vector<std::uint32_t>{0, 1, 1}));
    EXPECT_EQ(codes.alphabet_size(), 2u);
}
