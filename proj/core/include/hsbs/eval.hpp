#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsbs/cube.hpp"
#include "hsbs/ground_truth.hpp"
#include "hsbs/selection.hpp"

namespace hsbs {

struct SplitSpec {
    double train_fraction = 0.5;
    std::uint64_t seed = 0;
    /// Split each class separately (true) or the labeled pixels as one pool.
    bool stratified = true;

    friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// Train/test partition of the labeled pixels; masks are indexed by canonical
/// labeled-pixel position (see GroundTruth::labeled_pixels).
struct Split {
    std::vector<bool> train_mask;
    std::vector<bool> test_mask;

    std::vector<std::size_t> train_indices() const;
    std::vector<std::size_t> test_indices() const;

    friend bool operator==(const Split&, const Split&) = default;
};

/// Shuffles each class (or the whole pool) with Rng(seed), visiting classes in
/// ascending order, and sends the first round-half-up(fraction * n) members to
/// training, clamped to [1, n - 1].
///
/// Throws DegenerateClassError when a class has fewer than 2 pixels under
/// stratification and ContractError for a fraction outside (0, 1).
Split split(const GroundTruth& gt, const SplitSpec& spec);

/// Dense row-major matrix of per-pixel features.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<double> row(std::size_t r) { return std::span<double>(data_).subspan(r * cols_, cols_); }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_).subspan(r * cols_, cols_);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Selected-band features of the train and test pixels.
///
/// Each band is min-max scaled using the training pixels only; test values are
/// scaled the same way and clamped to [0, 1]. A band constant over the
/// training pixels becomes all zeros.
struct FeatureSet {
    std::vector<std::size_t> bands;  // 0-based, column order
    FeatureMatrix train;
    FeatureMatrix test;
    std::vector<int> train_labels;
    std::vector<int> test_labels;
    std::vector<std::size_t> train_pixels;  // row-major scene index
    std::vector<std::size_t> test_pixels;
};

FeatureSet build_features(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                          const Split& split);

/// k nearest neighbours under squared Euclidean distance.
///
/// Neighbours are ordered by (distance, training row); the vote goes to the
/// most frequent label with ties resolved to the smallest label. k larger
/// than the training set uses every training row.
std::vector<int> knn_predict(const FeatureMatrix& train, std::span<const int> train_labels,
                             const FeatureMatrix& test, std::size_t k);

enum class AccuracyMetric {
    overall,         // correct / total
    mean_per_class,  // mean over classes present in the truth of per-class recall
};

struct ClassifierConfig {
    std::size_t knn_k = 3;
    AccuracyMetric metric = AccuracyMetric::overall;

    friend bool operator==(const ClassifierConfig&, const ClassifierConfig&) = default;
};

class Classifier {
public:
    virtual ~Classifier() = default;
    /// Labels for every row of features.test.
    virtual std::vector<int> predict(const FeatureSet& features) const = 0;
    virtual std::string describe() const = 0;
};

class KnnClassifier final : public Classifier {
public:
    explicit KnnClassifier(std::size_t k);
    std::vector<int> predict(const FeatureSet& features) const override;
    std::string describe() const override;

private:
    std::size_t k_;
};

std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config);

/// Predictions for the test pixels of `split`, in canonical order.
std::vector<int> classify_knn(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                              const Split& split, std::size_t k);

/// Percent of matching entries. Throws ContractError on empty or unequal inputs.
double accuracy(std::span<const int> predicted, std::span<const int> truth);
double mean_class_accuracy(std::span<const int> predicted, std::span<const int> truth);
double score(AccuracyMetric metric, std::span<const int> predicted, std::span<const int> truth);

struct EvalRow {
    Algorithm algorithm;
    std::size_t requested;  // size asked for
    std::size_t n_bands;    // bands actually used
    double accuracy_percent;
    std::vector<std::size_t> selected_bands;  // 0-based
    /// Selection retained fewer bands than requested.
    bool shortfall = false;
};

struct Shortfall {
    std::size_t requested;
    std::size_t available;
};

struct EvalReport {
    std::vector<EvalRow> rows;
    /// Every requested size the selection could not reach, including ones
    /// whose row was dropped as a duplicate.
    std::vector<Shortfall> shortfalls;
    SplitSpec split;
    ClassifierConfig classifier;
    SelectionConfig selection;
};

/// Scores each prefix of an existing selection. A size past the end of the
/// selection is reported at the available length with `shortfall` set, unless
/// that length already has a row.
EvalReport evaluate_prefixes(const HyperCube& cube, const GroundTruth& gt, const SelectionResult& selection,
                             std::span<const std::size_t> sizes, const SplitSpec& split_spec,
                             const ClassifierConfig& classifier);

/// Runs selection once at k_max = max(sizes) and scores every requested prefix.
/// `sizes` must be strictly ascending, positive, and at most n_bands.
EvalReport sweep(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config,
                 std::span<const std::size_t> sizes, const SplitSpec& split_spec, const ClassifierConfig& classifier);

/// Full-scene map: train pixels keep their label, test pixels get predictions,
/// unlabeled pixels are 0.
LabelGrid classify_map(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                       const Split& split, const ClassifierConfig& classifier);

/// `algorithm,n_bands,accuracy_percent,selected_bands` with `|`-joined 1-based bands.
std::string format_report_csv(const EvalReport& report);
/// `key = value` snapshot of split, classifier and selection settings.
std::string format_report_config(const EvalReport& report);

struct FeatureExport {
    std::string train_csv;
    std::string test_csv;
};

/// `pixel_id,label,b<band>...` tables of normalized features for outside
/// classifiers. pixel_id is the row-major scene index; band numbers are 1-based.
FeatureExport export_features(const FeatureSet& features);

std::string_view to_string(AccuracyMetric metric);
AccuracyMetric parse_metric(std::string_view text);

}  // namespace hsbs
