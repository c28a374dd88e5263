#include "fafs/error.hpp"
#include "fafs/evaluator.hpp"
#include "fafs/objectives.hpp"
#include "fafs/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fafs;

TEST_SUITE("objectives") {

TEST_CASE("metric examples") {
    auto m = compute_metrics(std::vector<double>{1, 2}, std::vector<double>{1, 2});
    CHECK(m.rmse == 0.0);
    CHECK(m.std == 0.0);
    CHECK(m.mae == 0.0);
    CHECK(m.tic == 0.0);

    m = compute_metrics(std::vector<double>{3, -1}, std::vector<double>{1, 1});
    CHECK(m.rmse == doctest::Approx(2.0));
    CHECK(m.mean_error == doctest::Approx(0.0));
    CHECK(m.std == doctest::Approx(2.0));
    CHECK(m.errors == std::vector<double>{2, -2});

    m = compute_metrics(std::vector<double>{2, 2}, std::vector<double>{1, 1});
    CHECK(m.rmse == doctest::Approx(1.0));
    CHECK(m.mean_error == doctest::Approx(1.0));
    CHECK(m.std == doctest::Approx(0.0));
    REQUIRE(m.mape);
    CHECK(*m.mape == doctest::Approx(0.5));
    CHECK(m.tic == doctest::Approx(1.0 / 3.0));

    CHECK_FALSE(compute_metrics(std::vector<double>{0, 2}, std::vector<double>{1, 1}).mape);
    CHECK_THROWS_AS(compute_metrics(std::vector<double>{1}, std::vector<double>{1, 2}), PreconditionError);
}

TEST_CASE("rmse decomposes into bias and spread") {
    Rng rng(77);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 2 + rng.index(40);
        std::vector<double> t(n), f(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = rng.uniform(-50, 50);
            f[i] = rng.uniform(-50, 50);
        }
        const auto m = compute_metrics(t, f);
        CHECK(m.rmse * m.rmse == doctest::Approx(m.std * m.std + m.mean_error * m.mean_error).epsilon(1e-9));
    }
}

TEST_CASE("weighted objective and power") {
    PredictionMetrics m;
    m.rmse = 3.967;
    m.std = 3.956;
    CHECK(weighted_objective(m, 5, 13) == doctest::Approx(4.91864).epsilon(1e-9));
    CHECK(power(m, 5, 13) == doctest::Approx(0.203308).epsilon(1e-5));

    m.rmse = 1.0;
    m.std = 0.0;
    CHECK(weighted_objective(m, 13, 13) == doctest::Approx(1.52));

    m.rmse = 0.0;
    CHECK(weighted_objective(m, 3, 13) == 0.0);
    CHECK(power(m, 3, 13) == doctest::Approx(1e12));
    CHECK(power_from_z(1.0) == 1.0);
    CHECK_THROWS_AS(weighted_objective(m, 0, 13), PreconditionError);
    CHECK_THROWS_AS(weighted_objective(m, 14, 13), PreconditionError);
}

TEST_CASE("candidate evaluation on Johnson") {
    const auto data = normalize(split(load_csv(std::string(FAFS_SOURCE_DIR) + "/data/johnson.csv", "pbf"), 0.7, 1));
    MlpSettings mlp;
    mlp.n_hidden = 10;
    mlp.train.epochs = 20;
    Mask all(13, 1);
    CHECK(evaluate_candidate(all, data, mlp).objectives.n_f == 13);
    Mask five(13, 0);
    for (int i : {0, 5, 6, 11, 12}) five[i] = 1;
    const auto a = evaluate_candidate(five, data, mlp);
    const auto b = evaluate_candidate(five, data, mlp);
    CHECK(a.objectives.n_f == 5);
    CHECK(a.power == b.power);
    CHECK(a.z == doctest::Approx(weighted_objective(a.metrics, 5, 13)));
    CHECK(a.objectives.rmse == a.metrics.rmse);
}

TEST_CASE("evaluator caches by mask and matches direct evaluation") {
    const auto data = normalize(split(load_csv(std::string(FAFS_SOURCE_DIR) + "/data/johnson.csv", "pbf"), 0.7, 2));
    MlpSettings mlp;
    mlp.n_hidden = 4;
    mlp.train.epochs = 10;
    MlpEvaluator serial(data, mlp, {}, 42, 1);
    MlpEvaluator pooled(data, mlp, {}, 42, 3);
    std::vector<Mask> masks;
    Rng rng(1);
    for (int k = 0; k < 8; ++k) {
        Mask m(13, 0);
        for (auto& b : m) b = rng.uniform() < 0.5;
        m[k] = 1;
        masks.push_back(m);
    }
    masks.push_back(masks[0]);
    const auto a = serial.evaluate(masks);
    const auto b = pooled.evaluate(masks);
    for (std::size_t k = 0; k < masks.size(); ++k) CHECK(a[k]->power == b[k]->power);
    CHECK(a[0] == a.back());
    CHECK(serial.cache_size() == 8);
    CHECK(serial.compute_count() == 8);
    serial.evaluate(masks[3]);
    CHECK(serial.compute_count() == 8);
}

}
