#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsbs/eval.hpp"
#include "hsbs/selection.hpp"
#include "hsbs/synthetic.hpp"
#include "hsbs_cli/run_config.hpp"

namespace hsbs::cli {

/// Outputs are staged in memory and only written once every one of them has
/// been computed, each through an atomic rename.
struct OutputSet {
    std::vector<std::pair<std::filesystem::path, std::string>> files;

    void add(std::filesystem::path path, std::string contents);
    /// Creates the directory if needed and writes every file.
    void commit(const std::filesystem::path& dir) const;
};

/// Writes `mi_ranking.csv` (`rank,band,mi_bits`) and `run_config.txt`.
std::vector<BandScore> cmd_stats(const RunConfig& config);

/// Writes `selection.csv`, `selection.cfg` and `run_config.txt`.
SelectionResult cmd_select(const RunConfig& config);

struct SweepOptions {
    std::optional<std::size_t> map_at;     // write map_<algorithm>_<n>.txt
    std::optional<std::size_t> export_at;  // write train/test feature CSVs
};

/// Writes `report_<algorithm>.csv` and `.cfg` per algorithm, plus optional
/// classified maps and feature exports.
std::vector<EvalReport> cmd_sweep(const RunConfig& config, const SweepOptions& options = {});

/// Writes `cube.hdr`, `cube.raw` (f32, BSQ, little-endian), `gt.txt` and
/// `synthetic.cfg` into `output_dir`.
void cmd_synth(const SyntheticSpec& spec, const std::filesystem::path& output_dir);

}  // namespace hsbs::cli
