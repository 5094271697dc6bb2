// hsbs: information-theoretic band selection for hyperspectral cubes.
//
//   hsbs stats  --cube x.hdr --gt gt.txt --out DIR
//   hsbs select --cube x.hdr --gt gt.txt --algo tmi --k 20 --out DIR
//   hsbs sweep  --cube x.hdr --gt gt.txt --algo both --sizes 3,4,12,20 --map-at 20 --out DIR
//   hsbs synth  --config synth.cfg --out DIR

#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hsbs/cube.hpp"
#include "hsbs/synthetic.hpp"
#include "hsbs_cli/commands.hpp"
#include "hsbs_cli/run_config.hpp"

namespace {

// Flag values kept as text and applied through the config-file parser, so a
// flag and a config entry validate identically. Only flags actually given
// are applied, which is what lets them override the config file.
struct RunFlags {
    std::string config_file;
    std::map<std::string, std::string> values;
    std::optional<std::size_t> map_at;
    std::optional<std::size_t> export_at;
};

void add_run_flags(CLI::App* cmd, RunFlags& flags, bool with_sweep_options) {
    cmd->add_option("--config", flags.config_file, "flat `key = value` run config");
    auto bind = [&](const char* flag, const char* key, const char* help) {
        cmd->add_option_function<std::string>(
            flag, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
    };
    bind("--cube", "cube_header", "ENVI header of the hyperspectral cube");
    bind("--gt", "gt_path", "ground-truth label map");
    bind("--algo", "algorithm", "mi | tmi (sweep also accepts both)");
    bind("--k", "k_max", "number of bands to retain");
    bind("--th", "threshold_th", "mi_filter redundancy threshold in bits");
    bind("--bins", "n_bins", "histogram bins per band for MI ranking");
    bind("--seed", "split_seed", "train/test split seed");
    bind("--fraction", "train_fraction", "training fraction of labeled pixels");
    bind("--knn", "knn_k", "k for the k-NN classifier");
    bind("--sizes", "sizes", "comma-separated subset sizes");
    bind("--metric", "metric", "overall | mean_per_class");
    bind("--stratified", "stratified", "per-class split (true/false)");
    bind("--out", "output_dir", "output directory");
    if (with_sweep_options) {
        cmd->add_option("--map-at", flags.map_at, "also write the classified map for this subset size");
        cmd->add_option("--export-at", flags.export_at, "also write train/test feature CSVs for this size");
    }
}

hsbs::cli::RunConfig resolve(const RunFlags& flags) {
    hsbs::cli::RunConfig config;
    if (!flags.config_file.empty()) hsbs::cli::apply_config_file(config, flags.config_file);
    for (const auto& [key, value] : flags.values) hsbs::cli::apply_setting(config, key, value);
    return config;
}

std::string band_list(const std::vector<std::size_t>& bands) {
    std::string out;
    for (std::size_t b : bands) {
        if (!out.empty()) out += ' ';
        out += std::to_string(hsbs::to_user_band(b));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutual-information band selection for hyperspectral images"};
    app.require_subcommand(1);

    RunFlags stats_flags, select_flags, sweep_flags;
    auto* stats = app.add_subcommand("stats", "rank bands by mutual information with the ground truth");
    add_run_flags(stats, stats_flags, false);
    auto* select = app.add_subcommand("select", "run one band-selection filter");
    add_run_flags(select, select_flags, false);
    auto* sweep = app.add_subcommand("sweep", "accuracy over subset sizes for one or both filters");
    add_run_flags(sweep, sweep_flags, true);

    auto* synth = app.add_subcommand("synth", "generate a synthetic cube with known band structure");
    std::string synth_config;
    std::optional<std::uint64_t> synth_seed;
    std::string synth_out = ".";
    synth->add_option("--config", synth_config, "synthetic spec (`key = value`)");
    synth->add_option("--seed", synth_seed, "override the spec's seed");
    synth->add_option("--out", synth_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats) {
            const auto config = resolve(stats_flags);
            const auto ranking = hsbs::cli::cmd_stats(config);
            fmt::print("ranked {} bands -> {}\n", ranking.size(), (config.output_dir / "mi_ranking.csv").string());
        } else if (*select) {
            const auto result = hsbs::cli::cmd_select(resolve(select_flags));
            fmt::print("{}\n", band_list(result.selected));
        } else if (*sweep) {
            const auto config = resolve(sweep_flags);
            const auto reports = hsbs::cli::cmd_sweep(config, {sweep_flags.map_at, sweep_flags.export_at});
            for (const auto& report : reports) {
                for (const auto& s : report.shortfalls) {
                    fmt::print(stderr, "warning: {} retained only {} bands (asked for {})\n",
                               hsbs::to_string(report.selection.algorithm), s.available, s.requested);
                }
                fmt::print("{}", hsbs::format_report_csv(report));
            }
        } else if (*synth) {
            hsbs::SyntheticSpec spec;
            if (!synth_config.empty()) spec = hsbs::load_synthetic_spec(synth_config);
            if (synth_seed) spec.seed = *synth_seed;
            hsbs::cli::cmd_synth(spec, synth_out);
            fmt::print("wrote {} bands, {}x{} pixels -> {}\n", spec.total_bands(), spec.width, spec.height, synth_out);
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "hsbs: error: {}\n", e.what());
        return 1;
    }
    return 0;
}
