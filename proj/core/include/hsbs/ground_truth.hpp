#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsbs {

/// Dense label raster with no validity rules beyond non-negative labels. Used
/// for classified maps, which may legitimately miss classes.
struct LabelGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<int> labels;  // row-major

    friend bool operator==(const LabelGrid&, const LabelGrid&) = default;
};

/// Per-pixel class map: 0 = unlabeled, 1..n_classes = classes.
///
/// Every class in 1..n_classes must occur and at least one pixel must be
/// labeled. The canonical pixel order used by every statistic is the
/// row-major scan of labeled positions, exposed by labeled_pixels().
class GroundTruth {
public:
    /// Throws FormatError on negative labels, missing classes or an
    /// all-unlabeled map; DimensionError on a size mismatch.
    GroundTruth(std::size_t width, std::size_t height, std::vector<int> labels);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    int n_classes() const noexcept { return n_classes_; }
    std::size_t labeled_count() const noexcept { return labeled_.size(); }

    std::span<const int> labels() const noexcept { return labels_; }
    int label(std::size_t row, std::size_t col) const { return labels_[row * width_ + col]; }

    /// Row-major pixel indices of labeled pixels, ascending.
    std::span<const std::size_t> labeled_pixels() const noexcept { return labeled_; }

    LabelGrid grid() const { return {width_, height_, labels_}; }

    friend bool operator==(const GroundTruth& a, const GroundTruth& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.labels_ == b.labels_;
    }

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<int> labels_;
    int n_classes_ = 0;
    std::vector<std::size_t> labeled_;
};

struct Dims {
    std::size_t width = 0;
    std::size_t height = 0;
};

/// Parses `height` rows of `width` labels separated by whitespace or commas.
LabelGrid parse_label_grid(std::string_view text);

/// Loads a ground-truth map and checks it against `expected`.
///
/// If `<path>.dims` exists the file is read as a raw 8-bit label plane and the
/// sidecar's single line gives `width height`; otherwise the file is a text grid.
GroundTruth load_ground_truth(const std::filesystem::path& path, Dims expected);

std::string format_label_grid(const LabelGrid& grid);
void write_label_grid(const LabelGrid& grid, const std::filesystem::path& path);

}  // namespace hsbs
