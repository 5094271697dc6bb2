#include "hsbs_cli/run_config.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "hsbs/error.hpp"
#include "hsbs/key_value.hpp"

namespace hsbs::cli {

SelectionConfig RunConfig::selection(Algorithm algorithm) const {
    SelectionConfig s;
    s.k_max = k_max;
    s.threshold_th = threshold_th;
    s.discretization.n_bins = n_bins;
    s.algorithm = algorithm;
    return s;
}

SplitSpec RunConfig::split() const { return {train_fraction, split_seed, stratified}; }

ClassifierConfig RunConfig::classifier() const { return {knn_k, metric}; }

std::vector<Algorithm> parse_algorithms(std::string_view text) {
    const std::string t = to_lower(trim(text));
    if (t == "both" || t == "all") return {Algorithm::mi_filter, Algorithm::tmi_filter};
    std::vector<Algorithm> out;
    std::istringstream in(t);
    std::string item;
    while (std::getline(in, item, ',')) {
        const Algorithm a = parse_algorithm(item);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    if (out.empty()) throw FormatError("no algorithm given");
    return out;
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
    std::string t(text);
    for (char& c : t) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(t);
    std::vector<std::size_t> sizes;
    std::string item;
    while (in >> item) {
        const auto v = parse_uint(item, "sizes");
        if (v == 0) throw FormatError("field `sizes`: sizes must be positive");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw FormatError("field `sizes`: empty list");
    return sizes;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    const std::string k = to_lower(trim(key));
    if (k == "cube_header") {
        config.cube_header = trim(value);
    } else if (k == "gt_path") {
        config.gt_path = trim(value);
    } else if (k == "algorithm") {
        config.algorithms = parse_algorithms(value);
    } else if (k == "k_max") {
        config.k_max = parse_uint(value, k);
    } else if (k == "threshold_th") {
        config.threshold_th = parse_double(value, k);
    } else if (k == "n_bins") {
        const auto bins = parse_uint(value, k);
        if (bins < 2 || bins > (1U << 20)) throw FormatError("field `n_bins`: expected 2..1048576");
        config.n_bins = static_cast<std::uint32_t>(bins);
    } else if (k == "split_seed") {
        config.split_seed = parse_uint(value, k);
    } else if (k == "train_fraction") {
        config.train_fraction = parse_double(value, k);
    } else if (k == "stratified") {
        config.stratified = parse_bool(value, k);
    } else if (k == "knn_k") {
        config.knn_k = parse_uint(value, k);
    } else if (k == "metric") {
        config.metric = parse_metric(value);
    } else if (k == "sizes") {
        config.sizes = parse_sizes(value);
    } else if (k == "output_dir") {
        config.output_dir = trim(value);
    } else {
        throw FormatError("unknown config key `" + k + "`");
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    const auto kv = KeyValues::load(path);
    for (const auto& [key, value] : kv.entries()) {
        try {
            apply_setting(config, key, value);
        } catch (const FormatError& e) {
            throw FormatError(path.string() + ": " + e.what());
        }
    }
}

std::string format_run_config(const RunConfig& config) {
    std::string algorithms;
    for (Algorithm a : config.algorithms) {
        if (!algorithms.empty()) algorithms += ',';
        algorithms += to_string(a);
    }
    std::string sizes;
    for (std::size_t s : config.sizes) {
        if (!sizes.empty()) sizes += ',';
        sizes += std::to_string(s);
    }
    return fmt::format(
        "cube_header = {}\ngt_path = {}\nalgorithm = {}\nk_max = {}\nthreshold_th = {}\nn_bins = {}\n"
        "split_seed = {}\ntrain_fraction = {}\nstratified = {}\nknn_k = {}\nmetric = {}\nsizes = {}\n"
        "output_dir = {}\n",
        config.cube_header.string(), config.gt_path.string(), algorithms, config.k_max,
        format_bits(config.threshold_th), config.n_bins, config.split_seed, format_bits(config.train_fraction),
        config.stratified ? "true" : "false", config.knn_k, to_string(config.metric), sizes,
        config.output_dir.string());
}

}  // namespace hsbs::cli
