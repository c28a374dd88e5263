#include "fafs/error.hpp"
#include "fafs/runner.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fafs;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t lines(const std::string& s, char skip = '\0') {
    std::istringstream in(s);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != skip) ++n;
    return n;
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("fafs_runner_" + name);
    fs::remove_all(p);
    return p;
}

RunConfig quick(RunMode mode, const fs::path& out) {
    RunConfig c;
    c.mode = mode;
    c.data = fs::path(FAFS_SOURCE_DIR) / "data/johnson.csv";
    c.seeds = {1, 2};
    c.iters = 3;
    c.epochs = 15;
    c.out = out;
    return c;
}

} // namespace

TEST_SUITE("runner") {

TEST_CASE("seed expressions") {
    CHECK(parse_seeds("1..5") == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(parse_seeds("1,4,9") == std::vector<std::uint64_t>{1, 4, 9});
    CHECK(parse_seeds("7") == std::vector<std::uint64_t>{7});
    CHECK_THROWS_AS(parse_seeds("5..1"), ConfigError);
    CHECK_THROWS_AS(parse_seeds("a,b"), ConfigError);
}

TEST_CASE("JSON config keys") {
    RunConfig c;
    apply_json(c, nlohmann::json::parse(R"({"mode":"multi","iters":12,"seeds":"3..4","hidden_c":2.5})"));
    CHECK(c.mode == RunMode::Multi);
    CHECK(c.iters == 12);
    CHECK(c.seeds == std::vector<std::uint64_t>{3, 4});
    CHECK(c.hidden_constant(13) == 2.5);
    CHECK_THROWS_AS(apply_json(c, nlohmann::json::parse(R"({"itres":3})")), ConfigError);
    CHECK_THROWS_AS(apply_json(c, nlohmann::json::parse(R"({"iters":"many"})")), ConfigError);
    CHECK_THROWS_AS(load_run_config("/nonexistent.json"), ConfigError);

    RunConfig d;
    CHECK(d.hidden_constant(13) == 6.0);
    CHECK(d.hidden_constant(41) == 8.5);
    CHECK_THROWS_AS(d.validate(), ConfigError);
    d.data = "x.csv";
    d.split_ratio = 1.0;
    CHECK_THROWS_AS(d.validate(), ConfigError);
}

TEST_CASE("rule table dumps") {
    const auto dumps = fis_dumps();
    REQUIRE(dumps.size() == 4);
    CHECK(lines(dumps[0].second, '#') == 18);
    CHECK(lines(dumps[1].second, '#') == 18);
    CHECK(lines(dumps[2].second, '#') == 18);
    CHECK(lines(dumps[3].second, '#') == 33);
    const auto dir = scratch("fis");
    write_fis_dumps(dir);
    CHECK(slurp(dir / "fis4.txt") == dumps[3].second);
    fs::remove_all(dir);
}

TEST_CASE("single-mode batch artifacts are reproducible") {
    const auto out = scratch("single");
    const auto batch = run(quick(RunMode::Single, out));
    CHECK(batch.runs.size() == 2);
    for (const char* f : {"trace_1.csv", "trace_2.csv", "summary_1.json", "summary_2.json", "batch_summary.json"})
        CHECK(fs::exists(out / f));
    const auto trace = slurp(out / "trace_1.csv");
    CHECK(trace.rfind("iter,best_power,Z,rmse,std,n_f,p_glva,p_udvd,p_edels\n", 0) == 0);
    CHECK(lines(trace) == 4);
    const auto summary = nlohmann::json::parse(slurp(out / "summary_1.json"));
    CHECK(summary["best"]["mask"].get<std::string>().size() == 13);
    CHECK(summary["best"]["selected_features"].size() == summary["best"]["n_f"].get<std::size_t>());
    CHECK(batch.batch_summary["mean"].contains("rmse"));

    const auto first_summary = slurp(out / "summary_2.json");
    run(quick(RunMode::Single, out));
    CHECK(slurp(out / "trace_1.csv") == trace);
    CHECK(slurp(out / "summary_2.json") == first_summary);

    const auto plots = emit_plot_data(out);
    CHECK(plots.size() == 2);
    const auto conv = slurp(out / "convergence_1.dat");
    CHECK(conv[0] == '#');
    CHECK(lines(conv, '#') == 3);
    fs::remove_all(out);
}

TEST_CASE("multi-mode batch writes fronts") {
    const auto out = scratch("multi");
    const auto batch = run(quick(RunMode::Multi, out));
    const auto csv = slurp(out / "pareto_1.csv");
    CHECK(csv.rfind("mask,n_f,rmse,std\n", 0) == 0);
    const auto front = nlohmann::json::parse(slurp(out / "pareto_1.json"));
    CHECK(front.size() == batch.runs[0].multi->archive.size());
    CHECK(lines(csv) == front.size() + 1);
    emit_plot_data(out);
    CHECK(lines(slurp(out / "front_1.dat"), '#') == front.size());
    fs::remove_all(out);
}

TEST_CASE("plot export edge cases") {
    const auto out = scratch("plots");
    CHECK_THROWS_AS(emit_plot_data(out), DataError);
    fs::create_directories(out);
    CHECK_THROWS_AS(emit_plot_data(out), DataError);
    {
        std::ofstream(out / "pareto_9.csv") << "mask,n_f,rmse,std\n";
        std::ofstream trace(out / "trace_9.csv");
        trace << "iter,best_power\n";
        for (int i = 1; i <= 100; ++i) trace << i << ",0.2\n";
    }
    emit_plot_data(out);
    const auto front = slurp(out / "front_9.dat");
    CHECK(lines(front) == 1);
    CHECK(front[0] == '#');
    CHECK(lines(slurp(out / "convergence_9.dat"), '#') == 100);
    fs::remove_all(out);
}

TEST_CASE("bad inputs surface as typed errors") {
    auto c = quick(RunMode::Single, scratch("bad"));
    c.data = "/nonexistent.csv";
    CHECK_THROWS_AS(run(c), DataError);
    c = quick(RunMode::Single, scratch("bad"));
    c.target = "nope";
    CHECK_THROWS_AS(run(c), DataError);
    c = quick(RunMode::Single, scratch("bad"));
    c.schema = fs::path(FAFS_SOURCE_DIR) / "data/schemas/nhanes.json";
    CHECK_THROWS_AS(run(c), DataError);
    fs::remove_all(scratch("bad"));
}

}
