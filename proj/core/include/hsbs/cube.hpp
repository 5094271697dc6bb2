#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hsbs {

/// Offset between internal 0-based band indices and the 1-based numbering
/// used in every file and message a user sees.
inline constexpr std::size_t kBandIdOffset = 1;

constexpr std::size_t to_user_band(std::size_t band) { return band + kBandIdOffset; }

/// Radiance raster of `n_bands` planes of `height` x `width` samples.
///
/// Storage is band-major (band, row, col) whatever the on-disk interleave was,
/// so a band is one contiguous row-major plane. Immutable after construction.
class HyperCube {
public:
    /// Throws DimensionError on zero dimensions or a size mismatch and
    /// FormatError on a non-finite sample.
    HyperCube(std::size_t width, std::size_t height, std::size_t n_bands, std::vector<double> band_major);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t n_bands() const noexcept { return n_bands_; }
    std::size_t pixel_count() const noexcept { return width_ * height_; }

    /// Row-major plane of band `band` (0-based).
    std::span<const double> band(std::size_t band) const;

    double at(std::size_t band, std::size_t row, std::size_t col) const {
        return values_[(band * height_ + row) * width_ + col];
    }

    const std::vector<double>& values() const noexcept { return values_; }

    friend bool operator==(const HyperCube&, const HyperCube&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::size_t n_bands_;
    std::vector<double> values_;
};

}  // namespace hsbs
