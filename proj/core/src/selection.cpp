#include "hsbs/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "hsbs/error.hpp"
#include "hsbs/info.hpp"
#include "hsbs/key_value.hpp"

namespace hsbs {

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::mi_filter: return "mi_filter";
        case Algorithm::tmi_filter: return "tmi_filter";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    const std::string t = to_lower(trim(text));
    if (t == "mi" || t == "mi_filter") return Algorithm::mi_filter;
    if (t == "tmi" || t == "tmi_filter") return Algorithm::tmi_filter;
    throw FormatError("unknown algorithm `" + t + "` (expected mi or tmi)");
}

std::string_view to_string(ScoreKind kind) { return kind == ScoreKind::mi_gain ? "mi_gain" : "i3"; }

std::string format_bits(double bits) { return fmt::format("{:.17g}", bits); }

namespace {

void check_config(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config) {
    if (cube.width() != gt.width() || cube.height() != gt.height()) {
        throw DimensionError("cube and ground truth dimensions differ");
    }
    if (config.k_max == 0) throw ContractError("k_max must be at least 1");
    if (config.k_max > cube.n_bands()) {
        throw ContractError("k_max = " + std::to_string(config.k_max) + " exceeds the cube's " +
                            std::to_string(cube.n_bands()) + " bands");
    }
    if (!std::isfinite(config.threshold_th)) throw ContractError("threshold must be finite");
}

std::vector<CodedVariable> code_all_bands(const HyperCube& cube, const GroundTruth& gt,
                                          const DiscretizationConfig& disc) {
    std::vector<CodedVariable> coded;
    coded.reserve(cube.n_bands());
    for (std::size_t b = 0; b < cube.n_bands(); ++b) coded.push_back(discretize_band(cube, b, gt, disc));
    return coded;
}

constexpr DiscretizationConfig kGtRange{2, BinningStrategy::gt_range};

}  // namespace

std::vector<BandScore> rank_bands_by_mi(const HyperCube& cube, const GroundTruth& gt,
                                        const DiscretizationConfig& disc) {
    const CodedVariable truth = gt_codes(gt);
    std::vector<BandScore> scores;
    scores.reserve(cube.n_bands());
    for (std::size_t b = 0; b < cube.n_bands(); ++b) {
        scores.push_back({b, mutual_info(discretize_band(cube, b, gt, disc), truth)});
    }
    std::stable_sort(scores.begin(), scores.end(),
                     [](const BandScore& x, const BandScore& y) { return x.mi_bits > y.mi_bits; });
    return scores;
}

GtEstimate init_estimate(const HyperCube& cube, const GroundTruth& gt, std::size_t best_band) {
    return GtEstimate{discretize_band(cube, best_band, gt, kGtRange)};
}

GtEstimate update_estimate(const GtEstimate& est, const CodedVariable& band_codes) {
    if (est.codes.alphabet_size() != band_codes.alphabet_size()) {
        throw ContractError("update_estimate: alphabet " + std::to_string(band_codes.alphabet_size()) +
                            " does not match the estimate's " + std::to_string(est.codes.alphabet_size()));
    }
    if (est.codes.size() != band_codes.size()) throw ContractError("update_estimate: length mismatch");
    std::vector<std::uint32_t> codes(est.codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) codes[i] = (est.codes[i] + band_codes[i] + 1) / 2;
    return GtEstimate{CodedVariable(std::move(codes), est.codes.alphabet_size())};
}

SelectionResult select_mi_filter(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config) {
    check_config(cube, gt, config);
    SelectionResult result;
    result.config = config;
    result.config.algorithm = Algorithm::mi_filter;
    result.ranking = rank_bands_by_mi(cube, gt, config.discretization);

    const CodedVariable truth = gt_codes(gt);
    const std::size_t first = result.ranking.front().band;
    GtEstimate est = init_estimate(cube, gt, first);
    double est_mi = mutual_info(truth, est.codes);
    result.selected.push_back(first);
    result.trace.push_back({0, first, est_mi, ScoreKind::mi_gain, true});

    std::size_t step = 0;
    for (std::size_t r = 1; r < result.ranking.size() && result.selected.size() < config.k_max; ++r) {
        const std::size_t band = result.ranking[r].band;
        GtEstimate candidate = update_estimate(est, discretize_band(cube, band, gt, kGtRange));
        const double candidate_mi = mutual_info(truth, candidate.codes);
        const double gain = candidate_mi - est_mi;
        const bool accepted = gain > config.threshold_th;
        result.trace.push_back({++step, band, gain, ScoreKind::mi_gain, accepted});
        if (accepted) {
            result.selected.push_back(band);
            est = std::move(candidate);
            est_mi = candidate_mi;
        }
    }
    return result;
}

SelectionResult select_tmi_filter(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config) {
    check_config(cube, gt, config);
    SelectionResult result;
    result.config = config;
    result.config.algorithm = Algorithm::tmi_filter;
    result.ranking = rank_bands_by_mi(cube, gt, config.discretization);

    const CodedVariable truth = gt_codes(gt);
    const auto averaged = code_all_bands(cube, gt, kGtRange);
    const auto scored = config.candidate_coding == CandidateCoding::gt_range
                            ? averaged
                            : code_all_bands(cube, gt, config.discretization);

    const std::size_t first = result.ranking.front().band;
    GtEstimate est{averaged[first]};
    result.selected.push_back(first);
    result.trace.push_back({0, first, mutual_info(truth, est.codes), ScoreKind::mi_gain, true});

    std::vector<bool> taken(cube.n_bands(), false);
    taken[first] = true;
    for (std::size_t step = 1; result.selected.size() < config.k_max; ++step) {
        // Ascending band order with a strict comparison keeps the lowest index on ties.
        std::size_t best = cube.n_bands();
        double best_score = 0.0;
        for (std::size_t b = 0; b < cube.n_bands(); ++b) {
            if (taken[b]) continue;
            const double score = interaction_info(est.codes, scored[b], truth);
            if (best == cube.n_bands() || score > best_score) {
                best = b;
                best_score = score;
            }
        }
        if (best == cube.n_bands()) break;
        taken[best] = true;
        result.selected.push_back(best);
        result.trace.push_back({step, best, best_score, ScoreKind::i3, true});
        est = update_estimate(est, averaged[best]);
    }
    return result;
}

SelectionResult select_bands(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config) {
    return config.algorithm == Algorithm::mi_filter ? select_mi_filter(cube, gt, config)
                                                    : select_tmi_filter(cube, gt, config);
}

std::string format_selection_csv(const SelectionResult& result) {
    std::string out = "step,band,score_bits,score_kind,accepted\n";
    for (const TraceEntry& t : result.trace) {
        out += fmt::format("{},{},{},{},{}\n", t.step, to_user_band(t.band), format_bits(t.score_bits),
                           to_string(t.kind), t.accepted ? 1 : 0);
    }
    return out;
}

std::string format_selection_config(const SelectionConfig& config) {
    return fmt::format(
        "algorithm = {}\nk_max = {}\nthreshold_th = {}\nn_bins = {}\nbinning = {}\ncandidate_coding = {}\n",
        to_string(config.algorithm), config.k_max, format_bits(config.threshold_th), config.discretization.n_bins,
        to_string(config.discretization.strategy),
        config.candidate_coding == CandidateCoding::gt_range ? "gt_range" : "ranking_bins");
}

}  // namespace hsbs
