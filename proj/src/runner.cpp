#include "fafs/runner.hpp"

#include "fafs/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace fafs {

using nlohmann::json;

void RunConfig::validate() const {
    if (data.empty()) throw ConfigError("no dataset given (--data)");
    if (target.empty()) throw ConfigError("no target column given (--target)");
    if (seeds.empty()) throw ConfigError("no seeds given");
    if (!(beta >= 0.0) || !(gamma >= 0.0)) throw ConfigError("beta and gamma must be >= 0");
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw ConfigError("split_ratio must lie in (0, 1)");
    if (hidden_c && !(*hidden_c >= 0.0)) throw ConfigError("hidden_c must be >= 0");
    TrainConfig{epochs, learning_rate, momentum, init_range, 0}.validate();
    SearchConfig sc;
    sc.n_imp = n_imp;
    sc.n_col = n_col;
    sc.max_iters = iters;
    sc.tw = tw;
    sc.alpha = alpha;
    sc.initial_probability = initial_probability;
    sc.validate();
}

double RunConfig::hidden_constant(std::size_t n_x) const {
    if (hidden_c) return *hidden_c;
    return n_x == 41 ? 8.5 : 6.0;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
    static const std::regex list(R"(\s*\d+\s*(,\s*\d+\s*)*)");
    std::smatch m;
    std::vector<std::uint64_t> seeds;
    if (std::regex_match(text, m, range)) {
        const auto lo = std::stoull(m[1]);
        const auto hi = std::stoull(m[2]);
        if (hi < lo) throw ConfigError("seed range '" + text + "' is descending");
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    if (!std::regex_match(text, list)) throw ConfigError("cannot parse seeds '" + text + "'");
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
    return seeds;
}

void apply_json(RunConfig& c, const json& j) {
    if (!j.is_object()) throw ConfigError("run config must be a JSON object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "mode") {
                const auto m = v.get<std::string>();
                if (m != "single" && m != "multi") throw ConfigError("mode must be 'single' or 'multi'");
                c.mode = m == "single" ? RunMode::Single : RunMode::Multi;
            } else if (key == "data") c.data = v.get<std::string>();
            else if (key == "target") c.target = v.get<std::string>();
            else if (key == "schema") c.schema = v.get<std::string>();
            else if (key == "seeds") c.seeds = v.is_string() ? parse_seeds(v.get<std::string>())
                                                             : v.get<std::vector<std::uint64_t>>();
            else if (key == "n_imp") c.n_imp = v.get<std::size_t>();
            else if (key == "n_col") c.n_col = v.get<std::size_t>();
            else if (key == "iters") c.iters = v.get<int>();
            else if (key == "tw") c.tw = v.get<std::size_t>();
            else if (key == "alpha") c.alpha = v.get<double>();
            else if (key == "beta") c.beta = v.get<double>();
            else if (key == "gamma") c.gamma = v.get<double>();
            else if (key == "initial_probability") c.initial_probability = v.get<double>();
            else if (key == "epochs") c.epochs = v.get<int>();
            else if (key == "learning_rate") c.learning_rate = v.get<double>();
            else if (key == "momentum") c.momentum = v.get<double>();
            else if (key == "init_range") c.init_range = v.get<double>();
            else if (key == "hidden_c") {
                if (v.is_null()) c.hidden_c.reset();
                else c.hidden_c = v.get<double>();
            } else if (key == "split_ratio") c.split_ratio = v.get<double>();
            else if (key == "out") c.out = v.get<std::string>();
            else if (key == "threads") c.threads = v.get<unsigned>();
            else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    RunConfig c;
    apply_json(c, j);
    return c;
}

json to_json(const RunConfig& c) {
    json j;
    j["mode"] = c.mode == RunMode::Single ? "single" : "multi";
    j["data"] = c.data.string();
    j["target"] = c.target;
    j["seeds"] = c.seeds;
    j["n_imp"] = c.n_imp;
    j["n_col"] = c.n_col;
    j["iters"] = c.iters;
    j["tw"] = c.tw;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["gamma"] = c.gamma;
    j["initial_probability"] = c.initial_probability;
    j["epochs"] = c.epochs;
    j["learning_rate"] = c.learning_rate;
    j["momentum"] = c.momentum;
    j["init_range"] = c.init_range;
    j["hidden_c"] = c.hidden_c ? json(*c.hidden_c) : json(nullptr);
    j["split_ratio"] = c.split_ratio;
    return j;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write '" + path.string() + "'");
    return os;
}

void write_json(const json& j, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << j.dump(2) << '\n';
}

std::vector<std::string> selected_names(const Mask& mask, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(names[i]);
    return out;
}

json metrics_json(const PredictionMetrics& m) {
    return {{"rmse", m.rmse},
            {"std", m.std},
            {"mae", m.mae},
            {"mape", m.mape ? json(*m.mape) : json(nullptr)},
            {"tic", m.tic},
            {"mean_error", m.mean_error}};
}

json model_json(const MlpModel& m) {
    return {{"n_inputs", m.n_inputs}, {"n_hidden", m.n_hidden}, {"w1", m.params.w1},
            {"b1", m.params.b1},     {"w2", m.params.w2},       {"b2", m.params.b2}};
}

json solution_json(const Mask& mask, const Evaluation& ev, const std::vector<std::string>& names) {
    const auto n_f = ev.objectives.n_f;
    return {{"mask", mask_to_string(mask)},
            {"selected_features", selected_names(mask, names)},
            {"n_f", n_f},
            {"r_f", 100.0 * static_cast<double>(n_f) / static_cast<double>(mask.size())},
            {"metrics", metrics_json(ev.metrics)},
            {"z", ev.z},
            {"power", ev.power}};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

json aggregate(const std::vector<json>& rows, const std::vector<std::string>& keys) {
    json mean = json::object(), med = json::object();
    for (const auto& k : keys) {
        std::vector<double> v;
        for (const auto& r : rows)
            if (r.contains(k) && r[k].is_number()) v.push_back(r[k].get<double>());
        if (v.empty()) continue;
        double s = 0.0;
        for (double x : v) s += x;
        mean[k] = s / static_cast<double>(v.size());
        med[k] = median(v);
    }
    return {{"mean", mean}, {"median", med}};
}

} // namespace

void write_trace_csv(const std::vector<TraceEntry>& trace, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "iter,best_power,Z,rmse,std,n_f,p_glva,p_udvd,p_edels\n";
    for (const auto& e : trace)
        os << e.iter << ',' << format_number(e.best_power) << ',' << format_number(e.z) << ','
           << format_number(e.rmse) << ',' << format_number(e.std) << ',' << e.n_f << ','
           << format_number(e.probabilities[0]) << ',' << format_number(e.probabilities[1]) << ','
           << format_number(e.probabilities[2]) << '\n';
}

void write_multi_trace_csv(const std::vector<MultiTraceEntry>& trace, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "iter,archive_size,min_rmse,min_n_f,p_glva,p_udvd,p_edels\n";
    for (const auto& e : trace)
        os << e.iter << ',' << e.archive_size << ',' << format_number(e.min_rmse) << ',' << e.min_n_f << ','
           << format_number(e.probabilities[0]) << ',' << format_number(e.probabilities[1]) << ','
           << format_number(e.probabilities[2]) << '\n';
}

void write_pareto_csv(const ParetoArchive& archive, const std::filesystem::path& path) {
    auto os = open_out(path);
    os << "mask,n_f,rmse,std\n";
    for (const auto& e : archive.entries())
        os << mask_to_string(e.mask) << ',' << e.objectives.n_f << ',' << format_number(e.objectives.rmse) << ','
           << format_number(e.objectives.std) << '\n';
}

json pareto_json(const ParetoArchive& archive, const std::vector<std::string>& names) {
    json arr = json::array();
    for (const auto& e : archive.entries()) arr.push_back(solution_json(e.mask, *e.evaluation, names));
    return arr;
}

std::vector<std::pair<std::string, std::string>> fis_dumps() {
    return {{"fis1", fuzzy::build_fis1().dump()},
            {"fis2", fuzzy::build_fis2().dump()},
            {"fis3", fuzzy::build_fis3().dump()},
            {"fis4", fuzzy::build_fis4().dump()}};
}

void write_fis_dumps(const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, text] : fis_dumps()) {
        auto os = open_out(out_dir / (name + ".txt"));
        os << text;
    }
}

BatchOutcome run(const RunConfig& config) {
    config.validate();
    const Dataset data = load_csv(config.data, config.target);
    if (!config.schema.empty()) validate_schema(data, load_schema(config.schema));
    std::filesystem::create_directories(config.out);

    const std::size_t n_x = data.cols();
    MlpSettings mlp;
    mlp.n_hidden = hidden_size(n_x, 1, config.hidden_constant(n_x));
    mlp.train = {config.epochs, config.learning_rate, config.momentum, config.init_range, 0};
    const WeightedObjective weights{config.beta, config.gamma};

    BatchOutcome batch;
    std::vector<json> rows;
    for (const auto seed : config.seeds) {
        SearchConfig sc;
        sc.n_imp = config.n_imp;
        sc.n_col = config.n_col;
        sc.max_iters = config.iters;
        sc.tw = config.tw;
        sc.alpha = config.alpha;
        sc.initial_probability = config.initial_probability;
        sc.seed = seed;

        const SplitDataset prepared = normalize(split(data, config.split_ratio, seed));
        MlpEvaluator evaluator(prepared, mlp, weights, seed, config.threads);

        SeedOutcome outcome;
        outcome.seed = seed;
        const std::string tag = std::to_string(seed);
        json summary;
        summary["mode"] = config.mode == RunMode::Single ? "single" : "multi";
        summary["seed"] = seed;
        summary["dataset"] = data.name();
        summary["feature_names"] = data.feature_names();
        summary["n_features"] = n_x;
        summary["split"] = {{"ratio", config.split_ratio},
                            {"train_rows", prepared.train.rows()},
                            {"test_rows", prepared.test.rows()}};
        summary["config"] = to_json(config);
        summary["config"]["n_hidden"] = mlp.n_hidden;

        json row = {{"seed", seed}};
        if (config.mode == RunMode::Single) {
            auto result = run_single(sc, evaluator);
            write_trace_csv(result.trace, config.out / ("trace_" + tag + ".csv"));
            const Evaluation& ev = *result.best.evaluation;
            summary["best"] = solution_json(result.best.mask, ev, data.feature_names());
            summary["model"] = model_json(ev.model);
            row["rmse"] = ev.metrics.rmse;
            row["std"] = ev.metrics.std;
            row["mae"] = ev.metrics.mae;
            row["tic"] = ev.metrics.tic;
            if (ev.metrics.mape) row["mape"] = *ev.metrics.mape;
            row["n_f"] = ev.objectives.n_f;
            row["z"] = ev.z;
            row["power"] = ev.power;
            row["mask"] = mask_to_string(result.best.mask);
            outcome.single = std::move(result);
        } else {
            auto result = run_multi(sc, evaluator);
            write_multi_trace_csv(result.trace, config.out / ("trace_" + tag + ".csv"));
            write_pareto_csv(result.archive, config.out / ("pareto_" + tag + ".csv"));
            const json front = pareto_json(result.archive, data.feature_names());
            write_json(front, config.out / ("pareto_" + tag + ".json"));
            summary["pareto"] = front;
            summary["archive_capacity"] = result.archive.capacity();
            std::vector<std::size_t> nfs;
            double min_rmse = INFINITY;
            for (const auto& e : result.archive.entries()) {
                nfs.push_back(e.objectives.n_f);
                min_rmse = std::min(min_rmse, e.objectives.rmse);
            }
            std::sort(nfs.begin(), nfs.end());
            nfs.erase(std::unique(nfs.begin(), nfs.end()), nfs.end());
            row["archive_size"] = result.archive.size();
            row["distinct_n_f"] = nfs.size();
            row["min_rmse"] = min_rmse;
            outcome.multi = std::move(result);
        }
        outcome.evaluations = evaluator.compute_count();
        summary["evaluations"] = outcome.evaluations;
        write_json(summary, config.out / ("summary_" + tag + ".json"));
        rows.push_back(row);
        batch.runs.push_back(std::move(outcome));
    }

    const std::vector<std::string> keys = config.mode == RunMode::Single
                                              ? std::vector<std::string>{"rmse", "std", "mae", "mape", "tic",
                                                                         "n_f", "z", "power"}
                                              : std::vector<std::string>{"archive_size", "distinct_n_f", "min_rmse"};
    batch.batch_summary = {{"mode", config.mode == RunMode::Single ? "single" : "multi"},
                           {"dataset", data.name()},
                           {"seeds", config.seeds},
                           {"runs", rows}};
    const json agg = aggregate(rows, keys);
    batch.batch_summary["mean"] = agg["mean"];
    batch.batch_summary["median"] = agg["median"];
    write_json(batch.batch_summary, config.out / "batch_summary.json");
    return batch;
}

namespace {

std::vector<std::vector<std::string>> read_csv_cells(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw DataError("'" + path.string() + "' has no header");
    return rows;
}

} // namespace

std::vector<std::filesystem::path> emit_plot_data(const std::filesystem::path& out_dir) {
    static const std::regex trace_name(R"(trace_(\w+)\.csv)");
    static const std::regex pareto_name(R"(pareto_(\w+)\.csv)");
    if (!std::filesystem::is_directory(out_dir))
        throw DataError("run directory '" + out_dir.string() + "' does not exist");

    std::vector<std::filesystem::path> inputs;
    for (const auto& entry : std::filesystem::directory_iterator(out_dir)) inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    std::vector<std::filesystem::path> written;
    for (const auto& path : inputs) {
        const std::string file = path.filename().string();
        std::smatch m;
        if (std::regex_match(file, m, trace_name)) {
            const auto rows = read_csv_cells(path);
            const auto target = out_dir / ("convergence_" + m[1].str() + ".dat");
            auto os = open_out(target);
            os << "#";
            for (const auto& h : rows[0]) os << ' ' << h;
            os << '\n';
            for (std::size_t r = 1; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << rows[r][c];
                os << '\n';
            }
            written.push_back(target);
        } else if (std::regex_match(file, m, pareto_name)) {
            const auto rows = read_csv_cells(path);
            const auto target = out_dir / ("front_" + m[1].str() + ".dat");
            auto os = open_out(target);
            os << "# n_f rmse std mask\n";
            for (std::size_t r = 1; r < rows.size(); ++r) {
                if (rows[r].size() != 4) throw DataError("malformed row in '" + path.string() + "'");
                os << rows[r][1] << ' ' << rows[r][2] << ' ' << rows[r][3] << ' ' << rows[r][0] << '\n';
            }
            written.push_back(target);
        }
    }
    if (written.empty()) throw DataError("no trace or pareto files in '" + out_dir.string() + "'");
    return written;
}

} // namespace fafs
