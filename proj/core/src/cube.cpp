#include "hsbs/cube.hpp"

#include <cmath>
#include <string>

#include "hsbs/error.hpp"

namespace hsbs {

HyperCube::HyperCube(std::size_t width, std::size_t height, std::size_t n_bands,
                     std::vector<double> band_major)
    : width_(width), height_(height), n_bands_(n_bands), values_(std::move(band_major)) {
    if (width_ == 0 || height_ == 0 || n_bands_ == 0) {
        throw DimensionError("cube dimensions must be positive, got " + std::to_string(width_) + "x" +
                             std::to_string(height_) + "x" + std::to_string(n_bands_));
    }
    if (values_.size() != width_ * height_ * n_bands_) {
        throw DimensionError("cube holds " + std::to_string(values_.size()) + " samples, expected " +
                             std::to_string(width_ * height_ * n_bands_));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            const std::size_t plane = width_ * height_;
            throw FormatError("non-finite sample in band " + std::to_string(to_user_band(i / plane)) +
                              " at pixel " + std::to_string(i % plane));
        }
    }
}

std::span<const double> HyperCube::band(std::size_t band) const {
    if (band >= n_bands_) {
        throw ContractError("band " + std::to_string(band) + " out of range (n_bands=" +
                            std::to_string(n_bands_) + ")");
    }
    const std::size_t plane = width_ * height_;
    return std::span<const double>(values_).subspan(band * plane, plane);
}

}  // namespace hsbs
