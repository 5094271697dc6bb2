#include "hsbs/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "hsbs/error.hpp"
#include "hsbs/key_value.hpp"
#include "hsbs/random.hpp"

namespace hsbs {

std::vector<std::size_t> Split::train_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < train_mask.size(); ++i) {
        if (train_mask[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> Split::test_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < test_mask.size(); ++i) {
        if (test_mask[i]) out.push_back(i);
    }
    return out;
}

namespace {

std::size_t train_count(double fraction, std::size_t n) {
    auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5));
    return std::clamp<std::size_t>(count, 1, n - 1);
}

void assign(std::vector<std::size_t>& members, double fraction, Rng& rng, Split& out) {
    rng.shuffle(std::span<std::size_t>(members));
    const std::size_t n_train = train_count(fraction, members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        (i < n_train ? out.train_mask : out.test_mask)[members[i]] = true;
    }
}

}  // namespace

Split split(const GroundTruth& gt, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw ContractError("train_fraction must lie in (0, 1)");
    }
    const auto labels = gt.labels();
    const auto labeled = gt.labeled_pixels();
    Split out;
    out.train_mask.assign(labeled.size(), false);
    out.test_mask.assign(labeled.size(), false);
    Rng rng(spec.seed);

    if (spec.stratified) {
        std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(gt.n_classes()) + 1);
        for (std::size_t i = 0; i < labeled.size(); ++i) {
            members[static_cast<std::size_t>(labels[labeled[i]])].push_back(i);
        }
        for (int c = 1; c <= gt.n_classes(); ++c) {
            if (members[static_cast<std::size_t>(c)].size() < 2) {
                throw DegenerateClassError("class " + std::to_string(c) + " has fewer than 2 labeled pixels", c);
            }
        }
        for (int c = 1; c <= gt.n_classes(); ++c) {
            assign(members[static_cast<std::size_t>(c)], spec.train_fraction, rng, out);
        }
    } else {
        if (labeled.size() < 2) throw ContractError("need at least 2 labeled pixels to split");
        std::vector<std::size_t> all(labeled.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        assign(all, spec.train_fraction, rng, out);
    }
    return out;
}

FeatureSet build_features(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                          const Split& split) {
    if (bands.empty()) throw ContractError("classification needs at least one band");
    if (cube.width() != gt.width() || cube.height() != gt.height()) {
        throw DimensionError("cube and ground truth dimensions differ");
    }
    const auto labeled = gt.labeled_pixels();
    if (split.train_mask.size() != labeled.size() || split.test_mask.size() != labeled.size()) {
        throw ContractError("split masks do not match the ground truth's labeled pixels");
    }
    FeatureSet fs;
    fs.bands.assign(bands.begin(), bands.end());
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        const std::size_t pixel = labeled[i];
        if (split.train_mask[i]) {
            fs.train_pixels.push_back(pixel);
            fs.train_labels.push_back(gt.labels()[pixel]);
        } else if (split.test_mask[i]) {
            fs.test_pixels.push_back(pixel);
            fs.test_labels.push_back(gt.labels()[pixel]);
        }
    }
    if (fs.train_pixels.empty()) throw ContractError("split has no training pixels");

    fs.train = FeatureMatrix(fs.train_pixels.size(), bands.size());
    fs.test = FeatureMatrix(fs.test_pixels.size(), bands.size());
    for (std::size_t j = 0; j < bands.size(); ++j) {
        const auto plane = cube.band(bands[j]);
        double lo = plane[fs.train_pixels.front()];
        double hi = lo;
        for (std::size_t p : fs.train_pixels) {
            lo = std::min(lo, plane[p]);
            hi = std::max(hi, plane[p]);
        }
        const double range = hi - lo;
        auto scale = [&](double v) { return range > 0.0 ? std::clamp((v - lo) / range, 0.0, 1.0) : 0.0; };
        for (std::size_t i = 0; i < fs.train_pixels.size(); ++i) fs.train.row(i)[j] = scale(plane[fs.train_pixels[i]]);
        for (std::size_t i = 0; i < fs.test_pixels.size(); ++i) fs.test.row(i)[j] = scale(plane[fs.test_pixels[i]]);
    }
    return fs;
}

std::vector<int> knn_predict(const FeatureMatrix& train, std::span<const int> train_labels,
                             const FeatureMatrix& test, std::size_t k) {
    if (k == 0) throw ContractError("k must be at least 1");
    if (train.rows() == 0) throw ContractError("k-NN needs training rows");
    if (train_labels.size() != train.rows()) throw ContractError("one label per training row required");
    if (test.rows() > 0 && test.cols() != train.cols()) throw ContractError("train/test feature widths differ");

    const std::size_t kk = std::min(k, train.rows());
    std::vector<std::pair<double, std::size_t>> dist(train.rows());
    std::map<int, std::size_t> votes;
    std::vector<int> predicted(test.rows());
    for (std::size_t t = 0; t < test.rows(); ++t) {
        const auto x = test.row(t);
        for (std::size_t r = 0; r < train.rows(); ++r) {
            const auto y = train.row(r);
            double d = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double diff = x[j] - y[j];
                d += diff * diff;
            }
            dist[r] = {d, r};
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk), dist.end());

        votes.clear();
        for (std::size_t i = 0; i < kk; ++i) ++votes[train_labels[dist[i].second]];
        int best_label = 0;
        std::size_t best_votes = 0;
        for (const auto& [label, count] : votes) {  // ascending labels: first max wins
            if (count > best_votes) {
                best_label = label;
                best_votes = count;
            }
        }
        predicted[t] = best_label;
    }
    return predicted;
}

KnnClassifier::KnnClassifier(std::size_t k) : k_(k) {
    if (k_ == 0) throw ContractError("k must be at least 1");
}

std::vector<int> KnnClassifier::predict(const FeatureSet& features) const {
    return knn_predict(features.train, features.train_labels, features.test, k_);
}

std::string KnnClassifier::describe() const { return "knn(k=" + std::to_string(k_) + ")"; }

std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config) {
    return std::make_unique<KnnClassifier>(config.knn_k);
}

std::vector<int> classify_knn(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                              const Split& split, std::size_t k) {
    return KnnClassifier(k).predict(build_features(cube, gt, bands, split));
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
    if (predicted.size() != truth.size()) throw ContractError("prediction and truth lengths differ");
    if (truth.empty()) throw ContractError("accuracy of an empty test set");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) correct += predicted[i] == truth[i] ? 1 : 0;
    return 100.0 * static_cast<double>(correct) / static_cast<double>(truth.size());
}

double mean_class_accuracy(std::span<const int> predicted, std::span<const int> truth) {
    if (predicted.size() != truth.size()) throw ContractError("prediction and truth lengths differ");
    if (truth.empty()) throw ContractError("accuracy of an empty test set");
    std::map<int, std::pair<std::size_t, std::size_t>> per_class;  // label -> (correct, total)
    for (std::size_t i = 0; i < truth.size(); ++i) {
        auto& [correct, total] = per_class[truth[i]];
        ++total;
        correct += predicted[i] == truth[i] ? 1 : 0;
    }
    double sum = 0.0;
    for (const auto& [label, ct] : per_class) {
        sum += static_cast<double>(ct.first) / static_cast<double>(ct.second);
    }
    return 100.0 * sum / static_cast<double>(per_class.size());
}

double score(AccuracyMetric metric, std::span<const int> predicted, std::span<const int> truth) {
    return metric == AccuracyMetric::overall ? accuracy(predicted, truth) : mean_class_accuracy(predicted, truth);
}

EvalReport evaluate_prefixes(const HyperCube& cube, const GroundTruth& gt, const SelectionResult& selection,
                             std::span<const std::size_t> sizes, const SplitSpec& split_spec,
                             const ClassifierConfig& classifier) {
    EvalReport report;
    report.split = split_spec;
    report.classifier = classifier;
    report.selection = selection.config;

    const Split parts = split(gt, split_spec);
    const auto model = make_classifier(classifier);
    for (std::size_t size : sizes) {
        if (size == 0) throw ContractError("subset sizes must be positive");
        const std::size_t used = std::min(size, selection.selected.size());
        if (used < size) report.shortfalls.push_back({size, used});
        const bool duplicate = std::any_of(report.rows.begin(), report.rows.end(),
                                           [used](const EvalRow& r) { return r.n_bands == used; });
        if (duplicate) continue;

        const std::span<const std::size_t> bands(selection.selected.data(), used);
        const FeatureSet fs = build_features(cube, gt, bands, parts);
        const auto predicted = model->predict(fs);
        report.rows.push_back({selection.config.algorithm, size, used,
                               score(classifier.metric, predicted, fs.test_labels),
                               std::vector<std::size_t>(bands.begin(), bands.end()), used < size});
    }
    return report;
}

EvalReport sweep(const HyperCube& cube, const GroundTruth& gt, const SelectionConfig& config,
                 std::span<const std::size_t> sizes, const SplitSpec& split_spec, const ClassifierConfig& classifier) {
    if (sizes.empty()) throw ContractError("sweep needs at least one subset size");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) throw ContractError("subset sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw ContractError("subset sizes must be strictly ascending");
    }
    if (sizes.back() > cube.n_bands()) {
        throw ContractError("largest subset size " + std::to_string(sizes.back()) + " exceeds the cube's " +
                            std::to_string(cube.n_bands()) + " bands");
    }
    SelectionConfig run = config;
    run.k_max = sizes.back();
    return evaluate_prefixes(cube, gt, select_bands(cube, gt, run), sizes, split_spec, classifier);
}

LabelGrid classify_map(const HyperCube& cube, const GroundTruth& gt, std::span<const std::size_t> bands,
                       const Split& split, const ClassifierConfig& classifier) {
    LabelGrid map = gt.grid();
    const FeatureSet fs = build_features(cube, gt, bands, split);
    if (fs.test_pixels.empty()) return map;
    const auto predicted = make_classifier(classifier)->predict(fs);
    for (std::size_t i = 0; i < fs.test_pixels.size(); ++i) map.labels[fs.test_pixels[i]] = predicted[i];
    return map;
}

std::string format_report_csv(const EvalReport& report) {
    std::string out = "algorithm,n_bands,accuracy_percent,selected_bands\n";
    for (const EvalRow& row : report.rows) {
        std::string bands;
        for (std::size_t i = 0; i < row.selected_bands.size(); ++i) {
            if (i > 0) bands += '|';
            bands += std::to_string(to_user_band(row.selected_bands[i]));
        }
        out += fmt::format("{},{},{:.4f},{}\n", to_string(row.algorithm), row.n_bands, row.accuracy_percent, bands);
    }
    return out;
}

std::string format_report_config(const EvalReport& report) {
    std::string out = format_selection_config(report.selection);
    out += fmt::format("split_seed = {}\ntrain_fraction = {}\nstratified = {}\nclassifier = knn\nknn_k = {}\nmetric = {}\n",
                       report.split.seed, format_bits(report.split.train_fraction),
                       report.split.stratified ? "true" : "false", report.classifier.knn_k,
                       to_string(report.classifier.metric));
    std::string shortfalls;
    for (const Shortfall& s : report.shortfalls) {
        shortfalls += fmt::format("{}{}->{}", shortfalls.empty() ? "" : ",", s.requested, s.available);
    }
    if (!shortfalls.empty()) out += "shortfall = " + shortfalls + "\n";
    return out;
}

FeatureExport export_features(const FeatureSet& features) {
    std::string header = "pixel_id,label";
    for (std::size_t b : features.bands) header += fmt::format(",b{}", to_user_band(b));
    header += '\n';

    auto table = [&](const FeatureMatrix& m, const std::vector<int>& labels, const std::vector<std::size_t>& pixels) {
        std::string out = header;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out += fmt::format("{},{}", pixels[i], labels[i]);
            for (double v : m.row(i)) out += "," + format_bits(v);
            out += '\n';
        }
        return out;
    };
    return {table(features.train, features.train_labels, features.train_pixels),
            table(features.test, features.test_labels, features.test_pixels)};
}

std::string_view to_string(AccuracyMetric metric) {
    return metric == AccuracyMetric::overall ? "overall" : "mean_per_class";
}

AccuracyMetric parse_metric(std::string_view text) {
    const std::string t = to_lower(trim(text));
    if (t == "overall" || t == "oa") return AccuracyMetric::overall;
    if (t == "mean_per_class" || t == "aa" || t == "macro") return AccuracyMetric::mean_per_class;
    throw FormatError("unknown accuracy metric `" + t + "`");
}

}  // namespace hsbs
