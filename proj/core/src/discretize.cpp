#include "hsbs/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsbs/error.hpp"

namespace hsbs {

CodedVariable::CodedVariable(std::vector<std::uint32_t> codes, std::uint32_t alphabet_size)
    : codes_(std::move(codes)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) throw ContractError("alphabet_size must be positive");
    for (std::uint32_t c : codes_) {
        if (c >= alphabet_size_) {
            throw ContractError("code " + std::to_string(c) + " outside alphabet of size " +
                                std::to_string(alphabet_size_));
        }
    }
}

std::string_view to_string(BinningStrategy strategy) {
    switch (strategy) {
        case BinningStrategy::min_max_uniform: return "min_max_uniform";
        case BinningStrategy::gt_range: return "gt_range";
    }
    return "?";
}

CodedVariable quantize_uniform(std::span<const double> values, std::uint32_t n_levels) {
    if (n_levels == 0) throw ContractError("quantize_uniform: n_levels must be positive");
    std::vector<std::uint32_t> codes(values.size(), 0);
    if (values.empty() || n_levels == 1) return CodedVariable(std::move(codes), n_levels);

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double range = *hi_it - lo;
    if (range > 0.0) {
        const double levels = static_cast<double>(n_levels);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double scaled = std::floor((values[i] - lo) * levels / range);
            codes[i] = std::min(static_cast<std::uint32_t>(scaled), n_levels - 1);
        }
    }
    return CodedVariable(std::move(codes), n_levels);
}

CodedVariable discretize_band(const HyperCube& cube, std::size_t band, const GroundTruth& gt,
                              const DiscretizationConfig& config) {
    if (cube.width() != gt.width() || cube.height() != gt.height()) {
        throw DimensionError("cube and ground truth dimensions differ");
    }
    const auto plane = cube.band(band);
    const auto labeled = gt.labeled_pixels();
    std::vector<double> samples(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i) samples[i] = plane[labeled[i]];

    switch (config.strategy) {
        case BinningStrategy::min_max_uniform:
            if (config.n_bins < 2) throw ContractError("n_bins must be at least 2");
            return quantize_uniform(samples, config.n_bins);
        case BinningStrategy::gt_range:
            return quantize_uniform(samples, static_cast<std::uint32_t>(gt.n_classes()));
    }
    throw ContractError("unknown binning strategy");
}

CodedVariable gt_codes(const GroundTruth& gt) {
    const auto labels = gt.labels();
    const auto labeled = gt.labeled_pixels();
    std::vector<std::uint32_t> codes(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i) codes[i] = static_cast<std::uint32_t>(labels[labeled[i]] - 1);
    return CodedVariable(std::move(codes), static_cast<std::uint32_t>(gt.n_classes()));
}

}  // namespace hsbs
