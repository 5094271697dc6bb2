#include "hsbs_cli/commands.hpp"

#include <algorithm>
#include <filesystem>

#include <fmt/format.h>

#include "hsbs/envi.hpp"
#include "hsbs/error.hpp"
#include "hsbs/ground_truth.hpp"
#include "hsbs/io.hpp"

namespace hsbs::cli {

namespace fs = std::filesystem;

void OutputSet::add(fs::path path, std::string contents) { files.emplace_back(std::move(path), std::move(contents)); }

void OutputSet::commit(const fs::path& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    for (const auto& [name, contents] : files) write_file_atomic(dir / name, contents);
}

namespace {

struct Dataset {
    HyperCube cube;
    GroundTruth gt;
};

Dataset load_dataset(const RunConfig& config) {
    if (config.cube_header.empty()) throw FormatError("no cube header given (--cube)");
    if (config.gt_path.empty()) throw FormatError("no ground truth given (--gt)");
    if (!fs::exists(config.cube_header)) throw IoError("cube header not found: " + config.cube_header.string());
    if (!fs::exists(config.gt_path)) throw IoError("ground truth file not found: " + config.gt_path.string());
    HyperCube cube = load_cube(config.cube_header);
    GroundTruth gt = load_ground_truth(config.gt_path, {cube.width(), cube.height()});
    return {std::move(cube), std::move(gt)};
}

Algorithm single_algorithm(const RunConfig& config) {
    if (config.algorithms.size() != 1) throw FormatError("this command takes exactly one algorithm");
    return config.algorithms.front();
}

}  // namespace

std::vector<BandScore> cmd_stats(const RunConfig& config) {
    const Dataset ds = load_dataset(config);
    DiscretizationConfig disc;
    disc.n_bins = config.n_bins;
    auto ranking = rank_bands_by_mi(ds.cube, ds.gt, disc);

    std::string csv = "rank,band,mi_bits\n";
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        csv += fmt::format("{},{},{}\n", i + 1, to_user_band(ranking[i].band), format_bits(ranking[i].mi_bits));
    }
    OutputSet out;
    out.add("mi_ranking.csv", std::move(csv));
    out.add("run_config.txt", format_run_config(config));
    out.commit(config.output_dir);
    return ranking;
}

SelectionResult cmd_select(const RunConfig& config) {
    const Algorithm algorithm = single_algorithm(config);
    const Dataset ds = load_dataset(config);
    if (config.k_max == 0 || config.k_max > ds.cube.n_bands()) {
        throw ContractError(fmt::format("k_max = {} must lie in 1..{} (the cube's band count)", config.k_max,
                                        ds.cube.n_bands()));
    }
    auto result = select_bands(ds.cube, ds.gt, config.selection(algorithm));

    OutputSet out;
    out.add("selection.csv", format_selection_csv(result));
    out.add("selection.cfg", format_selection_config(result.config));
    out.add("run_config.txt", format_run_config(config));
    out.commit(config.output_dir);
    return result;
}

std::vector<EvalReport> cmd_sweep(const RunConfig& config, const SweepOptions& options) {
    const Dataset ds = load_dataset(config);
    std::vector<std::size_t> sizes = config.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.empty()) throw FormatError("no subset sizes given (--sizes)");
    if (sizes.back() > ds.cube.n_bands()) {
        throw ContractError(fmt::format("largest size {} exceeds the cube's {} bands", sizes.back(), ds.cube.n_bands()));
    }
    for (auto at : {options.map_at, options.export_at}) {
        if (at && (*at == 0 || *at > sizes.back())) {
            throw ContractError(fmt::format("--map-at/--export-at {} must lie in 1..{}", *at, sizes.back()));
        }
    }

    const Split parts = split(ds.gt, config.split());
    OutputSet out;
    std::vector<EvalReport> reports;
    for (Algorithm algorithm : config.algorithms) {
        SelectionConfig sel = config.selection(algorithm);
        sel.k_max = sizes.back();
        const SelectionResult selection = select_bands(ds.cube, ds.gt, sel);
        EvalReport report = evaluate_prefixes(ds.cube, ds.gt, selection, sizes, config.split(), config.classifier());

        const std::string name(to_string(algorithm));
        out.add("report_" + name + ".csv", format_report_csv(report));
        out.add("report_" + name + ".cfg", format_report_config(report));

        auto prefix = [&](std::size_t n) {
            const std::size_t used = std::min(n, selection.selected.size());
            return std::vector<std::size_t>(selection.selected.begin(),
                                            selection.selected.begin() + static_cast<std::ptrdiff_t>(used));
        };
        if (options.map_at) {
            const auto bands = prefix(*options.map_at);
            const LabelGrid map = classify_map(ds.cube, ds.gt, bands, parts, config.classifier());
            out.add(fmt::format("map_{}_{}.txt", name, bands.size()), format_label_grid(map));
        }
        if (options.export_at) {
            const auto bands = prefix(*options.export_at);
            const FeatureExport ex = export_features(build_features(ds.cube, ds.gt, bands, parts));
            out.add(fmt::format("train_{}_{}.csv", name, bands.size()), ex.train_csv);
            out.add(fmt::format("test_{}_{}.csv", name, bands.size()), ex.test_csv);
        }
        reports.push_back(std::move(report));
    }
    out.add("run_config.txt", format_run_config(config));
    out.commit(config.output_dir);
    return reports;
}

void cmd_synth(const SyntheticSpec& spec, const fs::path& output_dir) {
    const SyntheticDataset ds = generate_synthetic(spec);
    // Round to f32 so the written cube reloads to exactly these samples.
    std::vector<double> values(ds.cube.values().size());
    std::transform(ds.cube.values().begin(), ds.cube.values().end(), values.begin(),
                   [](double v) { return static_cast<double>(static_cast<float>(v)); });
    const HyperCube cube(ds.cube.width(), ds.cube.height(), ds.cube.n_bands(), std::move(values));

    const CubeWriteOptions options{Interleave::bsq, SampleType::f32, ByteOrder::little};
    const auto payload = encode_cube(cube, options);
    OutputSet out;
    out.add("cube.raw", std::string(reinterpret_cast<const char*>(payload.data()), payload.size()));
    out.add("cube.hdr", format_envi_header(cube, options, "cube.raw"));
    out.add("gt.txt", format_label_grid(ds.gt.grid()));
    out.add("synthetic.cfg", format_synthetic_spec(spec));
    out.commit(output_dir);
}

}  // namespace hsbs::cli
