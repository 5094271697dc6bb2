#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "hsbs/coded_variable.hpp"
#include "hsbs/cube.hpp"
#include "hsbs/ground_truth.hpp"

namespace hsbs {

enum class BinningStrategy {
    /// Band's observed [min, max] over labeled pixels onto n_bins uniform bins.
    min_max_uniform,
    /// Same uniform binning onto n_classes levels, i.e. the ground-truth code
    /// alphabet 0..n_classes-1. `n_bins` is ignored.
    gt_range,
};

std::string_view to_string(BinningStrategy strategy);

struct DiscretizationConfig {
    std::uint32_t n_bins = 256;
    BinningStrategy strategy = BinningStrategy::min_max_uniform;

    friend bool operator==(const DiscretizationConfig&, const DiscretizationConfig&) = default;
};

/// Uniform binning of `values` onto `n_levels` codes.
///
/// code = floor((v - min) * n_levels / (max - min)), clamped to n_levels - 1,
/// so bins are half-open [lo, hi) except the top one which is closed. A
/// constant input maps to all zeros.
CodedVariable quantize_uniform(std::span<const double> values, std::uint32_t n_levels);

/// Codes band `band` (0-based) over the labeled pixels of `gt`, in canonical order.
CodedVariable discretize_band(const HyperCube& cube, std::size_t band, const GroundTruth& gt,
                              const DiscretizationConfig& config);

/// Class labels 1..C remapped to 0..C-1 over labeled pixels; alphabet C.
CodedVariable gt_codes(const GroundTruth& gt);

}  // namespace hsbs
