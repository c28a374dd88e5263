// Command-line front end: fuzzy adaptive evolutionary feature selection with
// an MLP wrapper, single- or multi-objective.

#include "fafs/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy adaptive evolutionary feature selection for body fat regression"};

    std::string mode, data, target, config_path, seeds, out, schema;
    int iters = 0;
    unsigned threads = 0;
    bool dump_fis = false;
    bool emit_plots = false;

    app.add_option("--mode", mode, "single or multi")->check(CLI::IsMember({"single", "multi"}));
    app.add_option("--data", data, "CSV dataset with a header row");
    app.add_option("--target", target, "target column name (default pbf)");
    app.add_option("--config", config_path, "JSON run configuration; flags override it");
    app.add_option("--seeds", seeds, "seed range '1..5' or list '1,2,3'");
    app.add_option("--iters", iters, "maximum iterations")->check(CLI::PositiveNumber);
    app.add_option("--out", out, "output directory (default results)");
    app.add_option("--schema", schema, "schema manifest to validate the dataset columns against");
    app.add_option("--threads", threads, "evaluation worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--dump-fis", dump_fis, "write the four rule tables as text");
    app.add_flag("--emit-plots", emit_plots, "write gnuplot data files for the run directory");

    CLI11_PARSE(app, argc, argv);

    try {
        fafs::RunConfig cfg;
        if (!config_path.empty()) cfg = fafs::load_run_config(config_path);
        if (!mode.empty()) cfg.mode = mode == "single" ? fafs::RunMode::Single : fafs::RunMode::Multi;
        if (!data.empty()) cfg.data = data;
        if (!target.empty()) cfg.target = target;
        if (!seeds.empty()) cfg.seeds = fafs::parse_seeds(seeds);
        if (iters > 0) cfg.iters = iters;
        if (!out.empty()) cfg.out = out;
        if (!schema.empty()) cfg.schema = schema;
        if (threads > 0) cfg.threads = threads;

        if (dump_fis) {
            fafs::write_fis_dumps(cfg.out);
            for (const auto& [name, text] : fafs::fis_dumps()) std::cout << text;
        }
        if (!cfg.data.empty()) {
            const auto batch = fafs::run(cfg);
            std::cout << batch.batch_summary.dump(2) << '\n';
        } else if (!dump_fis && !emit_plots) {
            throw fafs::ConfigError("nothing to do: give --data, --dump-fis or --emit-plots");
        }
        if (emit_plots)
            for (const auto& p : fafs::emit_plot_data(cfg.out)) std::cerr << "wrote " << p.string() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "fafs: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
