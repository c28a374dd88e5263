#pragma once

#include "fafs/error.hpp"
#include "fafs/pareto.hpp"
#include "fafs/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fafs {

enum class RunMode { Single, Multi };

struct RunConfig {
    RunMode mode = RunMode::Single;
    std::filesystem::path data;
    std::string target = "pbf";
    std::filesystem::path schema; // optional column check
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t n_imp = 5;
    std::size_t n_col = 15;
    int iters = 100;
    std::size_t tw = 10;
    double alpha = 10.0;
    double beta = 0.04;
    double gamma = 0.04;
    double initial_probability = 0.5;
    int epochs = 200;
    double learning_rate = 0.01;
    double momentum = 0.9;
    double init_range = 0.5;
    std::optional<double> hidden_c; // default: 8.5 for 41 features, else 6
    double split_ratio = 0.7;
    std::filesystem::path out = "results";
    unsigned threads = 1;

    void validate() const;
    /// Hidden-layer constant c for a dataset with n_x features.
    double hidden_constant(std::size_t n_x) const;
};

/// "1..5", "1,4,9" or "7".
std::vector<std::uint64_t> parse_seeds(const std::string& text);

/// Applies flat JSON keys onto `config`; unknown keys are a ConfigError.
void apply_json(RunConfig& config, const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

struct SeedOutcome {
    std::uint64_t seed = 0;
    std::optional<SingleRunResult> single;
    std::optional<MultiRunResult> multi;
    std::size_t evaluations = 0;
};

struct BatchOutcome {
    std::vector<SeedOutcome> runs;
    nlohmann::json batch_summary;
};

/// Loads the data, runs every seed, and writes trace_<seed>.csv,
/// summary_<seed>.json, pareto_<seed>.csv/.json (multi mode) and
/// batch_summary.json under config.out.
BatchOutcome run(const RunConfig& config);

/// The four rule bases, one rule per line.
std::vector<std::pair<std::string, std::string>> fis_dumps();
void write_fis_dumps(const std::filesystem::path& out_dir);

void write_trace_csv(const std::vector<TraceEntry>& trace, const std::filesystem::path& path);
void write_multi_trace_csv(const std::vector<MultiTraceEntry>& trace, const std::filesystem::path& path);
void write_pareto_csv(const ParetoArchive& archive, const std::filesystem::path& path);
nlohmann::json pareto_json(const ParetoArchive& archive, const std::vector<std::string>& feature_names);

/// Gnuplot-ready views of a run directory: convergence_<seed>.dat from each
/// trace CSV and front_<seed>.dat from each pareto CSV. Returns the files
/// written; throws DataError when the directory holds no run artifacts.
std::vector<std::filesystem::path> emit_plot_data(const std::filesystem::path& out_dir);

std::string format_number(double v);

} // namespace fafs
