#include "hsbs/ground_truth.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <sstream>

#include "hsbs/error.hpp"
#include "hsbs/io.hpp"
#include "hsbs/key_value.hpp"

namespace hsbs {

GroundTruth::GroundTruth(std::size_t width, std::size_t height, std::vector<int> labels)
    : width_(width), height_(height), labels_(std::move(labels)) {
    if (width_ == 0 || height_ == 0) throw DimensionError("ground truth dimensions must be positive");
    if (labels_.size() != width_ * height_) {
        throw DimensionError("ground truth holds " + std::to_string(labels_.size()) + " labels, expected " +
                             std::to_string(width_ * height_));
    }
    for (std::size_t p = 0; p < labels_.size(); ++p) {
        if (labels_[p] < 0) {
            throw FormatError("negative label " + std::to_string(labels_[p]) + " at pixel " + std::to_string(p));
        }
        if (labels_[p] > 0) {
            labeled_.push_back(p);
            n_classes_ = std::max(n_classes_, labels_[p]);
        }
    }
    if (labeled_.empty()) throw FormatError("ground truth has no labeled pixels");

    std::vector<bool> seen(static_cast<std::size_t>(n_classes_) + 1, false);
    for (std::size_t p : labeled_) seen[static_cast<std::size_t>(labels_[p])] = true;
    for (int c = 1; c <= n_classes_; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) {
            throw FormatError("class " + std::to_string(c) + " has no labeled pixels (max label is " +
                              std::to_string(n_classes_) + ")");
        }
    }
}

LabelGrid parse_label_grid(std::string_view text) {
    LabelGrid grid;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream tokens(line);
        std::string token;
        std::size_t cols = 0;
        while (tokens >> token) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw FormatError("row " + std::to_string(row) + ": label `" + token + "` is not an integer");
            }
            if (value < 0) {
                throw FormatError("row " + std::to_string(row) + ": negative label " + token);
            }
            grid.labels.push_back(value);
            ++cols;
        }
        if (cols == 0) {
            --row;
            continue;
        }
        if (grid.width == 0) {
            grid.width = cols;
        } else if (cols != grid.width) {
            throw DimensionError("row " + std::to_string(row) + " has " + std::to_string(cols) +
                                 " labels, expected " + std::to_string(grid.width));
        }
    }
    grid.height = row;
    if (grid.width == 0) throw FormatError("label grid is empty");
    return grid;
}

namespace {

LabelGrid load_label_plane(const std::filesystem::path& path, const std::filesystem::path& sidecar) {
    std::istringstream dims(read_text_file(sidecar));
    std::string w, h;
    if (!(dims >> w >> h)) throw FormatError(sidecar.string() + ": expected `width height`");
    LabelGrid grid;
    grid.width = parse_uint(w, "width");
    grid.height = parse_uint(h, "height");
    const auto bytes = read_binary_file(path);
    if (bytes.size() != grid.width * grid.height) {
        throw TruncationError(path.string() + ": label plane holds " + std::to_string(bytes.size()) +
                                  " bytes, expected " + std::to_string(grid.width * grid.height),
                              grid.width * grid.height, bytes.size());
    }
    grid.labels.assign(bytes.begin(), bytes.end());
    return grid;
}

}  // namespace

GroundTruth load_ground_truth(const std::filesystem::path& path, Dims expected) {
    if (!std::filesystem::exists(path)) throw IoError("ground truth file not found: " + path.string());
    auto sidecar = path;
    sidecar += ".dims";
    LabelGrid grid;
    try {
        grid = std::filesystem::exists(sidecar) ? load_label_plane(path, sidecar)
                                                : parse_label_grid(read_text_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    if (grid.width != expected.width || grid.height != expected.height) {
        throw DimensionError(path.string() + ": ground truth is " + std::to_string(grid.width) + "x" +
                             std::to_string(grid.height) + ", cube is " + std::to_string(expected.width) +
                             "x" + std::to_string(expected.height));
    }
    try {
        return GroundTruth(grid.width, grid.height, std::move(grid.labels));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string format_label_grid(const LabelGrid& grid) {
    std::string out;
    out.reserve(grid.labels.size() * 3);
    for (std::size_t r = 0; r < grid.height; ++r) {
        for (std::size_t c = 0; c < grid.width; ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(grid.labels[r * grid.width + c]);
        }
        out += '\n';
    }
    return out;
}

void write_label_grid(const LabelGrid& grid, const std::filesystem::path& path) {
    write_file_atomic(path, format_label_grid(grid));
}

}  // namespace hsbs
