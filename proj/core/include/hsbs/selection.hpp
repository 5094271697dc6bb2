#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hsbs/coded_variable.hpp"
#include "hsbs/cube.hpp"
#include "hsbs/discretize.hpp"
#include "hsbs/ground_truth.hpp"

namespace hsbs {

enum class Algorithm {
    /// Greedy walk of the MI ranking; a band is kept when it raises
    /// MI(GT, GT_est) by more than the redundancy threshold.
    mi_filter,
    /// Greedy argmax of the interaction information I(GT_est; band; GT).
    tmi_filter,
};

std::string_view to_string(Algorithm algorithm);
/// Accepts `mi`, `mi_filter`, `tmi`, `tmi_filter`.
Algorithm parse_algorithm(std::string_view text);

/// Coding of candidate bands inside the tmi_filter score.
enum class CandidateCoding {
    /// Ground-truth alphabet, same as the estimate.
    gt_range,
    /// The ranking discretization (n_bins levels).
    ranking_bins,
};

struct SelectionConfig {
    std::size_t k_max = 20;
    /// Signed bits; mi_filter keeps a band iff its gain exceeds this.
    double threshold_th = 0.0;
    DiscretizationConfig discretization{};
    Algorithm algorithm = Algorithm::tmi_filter;
    CandidateCoding candidate_coding = CandidateCoding::gt_range;

    friend bool operator==(const SelectionConfig&, const SelectionConfig&) = default;
};

struct BandScore {
    std::size_t band;  // 0-based
    double mi_bits;

    friend bool operator==(const BandScore&, const BandScore&) = default;
};

enum class ScoreKind { mi_gain, i3 };
std::string_view to_string(ScoreKind kind);

/// One scored candidate. Step 0 is the initial band (score = MI(GT, GT_est)).
/// mi_filter numbers every visited candidate; tmi_filter numbers selections
/// and records only the winner of each step.
struct TraceEntry {
    std::size_t step;
    std::size_t band;  // 0-based
    double score_bits;
    ScoreKind kind;
    bool accepted;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SelectionResult {
    std::vector<std::size_t> selected;  // 0-based, selection order
    std::vector<TraceEntry> trace;
    SelectionConfig config;
    std::vector<BandScore> ranking;

    friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

/// Running approximation of the ground truth, coded in the GT alphabet.
struct GtEstimate {
    CodedVariable codes;
};

/// Every band scored by MI with the ground truth, by decreasing MI; ties go to
/// the lower band index.
std::vector<BandScore> rank_bands_by_mi(const HyperCube& cube, const GroundTruth& gt,
                                        const DiscretizationConfig& disc);

/// Estimate seeded from `best_band` coded onto the GT alphabet.
GtEstimate init_estimate(const HyperCube& cube, const GroundTruth& gt, std::size_t best_band);

/// Pixel-wise average with half-up rounding: (est + band + 1) / 2 in integers.
/// Throws ContractError when the alphabets or lengths differ.
GtEstimate update_estimate(const GtEstimate& est, const CodedVariable& band_codes);

SelectionResult select_mi_filter(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config);
SelectionResult select_tmi_filter(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config);

/// Dispatches on config.algorithm.
SelectionResult select_bands(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config);

/// `step,band,score_bits,score_kind,accepted`, bands 1-based, accepted as 0/1.
std::string format_selection_csv(const SelectionResult& result);
/// `key = value` snapshot of the configuration.
std::string format_selection_config(const SelectionConfig& config);

/// Formats bits with enough digits to round-trip a double.
std::string format_bits(double bits);

}  // namespace hsbs
