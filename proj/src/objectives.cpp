#include "fafs/objectives.hpp"

#include "fafs/error.hpp"

#include <cmath>
#include <string>

namespace fafs {

PredictionMetrics compute_metrics(std::span<const double> targets, std::span<const double> predictions) {
    if (targets.size() != predictions.size())
        throw PreconditionError("metrics: " + std::to_string(targets.size()) + " targets vs " +
                                std::to_string(predictions.size()) + " predictions");
    if (targets.empty()) throw PreconditionError("metrics: no observations");

    const auto n = static_cast<double>(targets.size());
    PredictionMetrics m;
    m.errors.resize(targets.size());
    double sq = 0.0, abs_sum = 0.0, ape = 0.0, t2 = 0.0, f2 = 0.0;
    bool mape_defined = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double e = targets[i] - predictions[i];
        m.errors[i] = e;
        m.mean_error += e;
        sq += e * e;
        abs_sum += std::abs(e);
        if (targets[i] == 0.0)
            mape_defined = false;
        else
            ape += std::abs(e / targets[i]);
        t2 += targets[i] * targets[i];
        f2 += predictions[i] * predictions[i];
    }
    m.mean_error /= n;
    m.rmse = std::sqrt(sq / n);
    double var = 0.0;
    for (double e : m.errors) var += (e - m.mean_error) * (e - m.mean_error);
    m.std = std::sqrt(var / n);
    m.mae = abs_sum / n;
    if (mape_defined) m.mape = ape / n;
    const double denom = std::sqrt(t2 / n) + std::sqrt(f2 / n);
    m.tic = denom > 0.0 ? m.rmse / denom : 0.0;
    return m;
}

double weighted_objective(const PredictionMetrics& metrics, std::size_t n_f, std::size_t n_x,
                          const WeightedObjective& w) {
    if (n_f < 1 || n_f > n_x)
        throw PreconditionError("feature count " + std::to_string(n_f) + " outside [1, " +
                                std::to_string(n_x) + "]");
    return metrics.rmse * (1.0 + w.beta * static_cast<double>(n_f)) + w.gamma * metrics.std;
}

double power_from_z(double z) noexcept { return z > kEpsilon ? 1.0 / z : 1.0 / kEpsilon; }

double power(const PredictionMetrics& metrics, std::size_t n_f, std::size_t n_x, const WeightedObjective& w) {
    return power_from_z(weighted_objective(metrics, n_f, n_x, w));
}

Evaluation evaluate_candidate(const Mask& mask, const SplitDataset& data, const MlpSettings& mlp,
                              const WeightedObjective& w) {
    const Dataset train_x = project(data.train, mask);
    const Dataset test_x = project(data.test, mask);
    Evaluation ev;
    ev.model = train(train_x, mlp.n_hidden, mlp.train);
    const auto pred = predict(ev.model, test_x);
    ev.metrics = compute_metrics(test_x.target(), pred);
    const std::size_t n_f = count_selected(mask);
    ev.objectives = {n_f, ev.metrics.rmse, ev.metrics.std};
    ev.z = weighted_objective(ev.metrics, n_f, mask.size(), w);
    ev.power = power_from_z(ev.z);
    return ev;
}

} // namespace fafs
