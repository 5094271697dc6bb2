#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hsbs/eval.hpp"
#include "hsbs/selection.hpp"

namespace hsbs::cli {

/// Everything one CLI run needs. Field names double as config-file keys.
struct RunConfig {
    std::filesystem::path cube_header;
    std::filesystem::path gt_path;
    /// `select` takes exactly one; `sweep` runs each in turn.
    std::vector<Algorithm> algorithms{Algorithm::tmi_filter};
    std::size_t k_max = 20;
    double threshold_th = 0.0;
    std::uint32_t n_bins = 256;
    std::uint64_t split_seed = 0;
    double train_fraction = 0.5;
    bool stratified = true;
    std::size_t knn_k = 3;
    AccuracyMetric metric = AccuracyMetric::overall;
    std::vector<std::size_t> sizes{3, 4, 12, 14, 18, 20, 25, 35, 36, 40, 45, 50, 53, 60, 70, 75, 80, 83};
    std::filesystem::path output_dir = ".";

    SelectionConfig selection(Algorithm algorithm) const;
    SplitSpec split() const;
    ClassifierConfig classifier() const;
};

/// Applies one `key = value` pair; throws FormatError for unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Overlays every entry of a flat config file onto `config`.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// `mi`, `tmi`, `both`, or a comma list of algorithm names.
std::vector<Algorithm> parse_algorithms(std::string_view text);

/// Comma/space separated positive counts.
std::vector<std::size_t> parse_sizes(std::string_view text);

/// Fully resolved settings in config-file syntax.
std::string format_run_config(const RunConfig& config);

}  // namespace hsbs::cli
