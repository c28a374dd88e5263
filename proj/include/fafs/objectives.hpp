#pragma once

#include "fafs/dataset.hpp"
#include "fafs/mlp.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fafs {

/// Reciprocal guard used wherever a fitness denominator can reach zero.
inline constexpr double kEpsilon = 1e-12;

struct PredictionMetrics {
    double rmse = 0.0;
    double std = 0.0;        // population SD of the errors
    double mean_error = 0.0;
    double mae = 0.0;
    std::optional<double> mape; // fraction; empty when some target is 0
    double tic = 0.0;
    std::vector<double> errors; // target - prediction
};

/// Minimized objectives: selected-feature count, RMSE, error SD.
struct ObjectiveVector {
    std::size_t n_f = 0;
    double rmse = 0.0;
    double std = 0.0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Weights on feature count and error SD in the scalar objective.
struct WeightedObjective {
    double beta = 0.04;
    double gamma = 0.04;
};

PredictionMetrics compute_metrics(std::span<const double> targets, std::span<const double> predictions);

/// Z = RMSE * (1 + beta * n_f) + gamma * STD. Requires 1 <= n_f <= n_x.
double weighted_objective(const PredictionMetrics& metrics, std::size_t n_f, std::size_t n_x,
                          const WeightedObjective& w = {});

/// 1 / Z, or 1 / kEpsilon when Z is (numerically) zero.
double power(const PredictionMetrics& metrics, std::size_t n_f, std::size_t n_x,
             const WeightedObjective& w = {});
double power_from_z(double z) noexcept;

struct MlpSettings {
    std::size_t n_hidden = 10;
    TrainConfig train;
};

struct Evaluation {
    PredictionMetrics metrics;
    ObjectiveVector objectives;
    double z = 0.0;
    double power = 0.0;
    MlpModel model;
};

/// Trains on the masked train split and scores on the masked test split.
Evaluation evaluate_candidate(const Mask& mask, const SplitDataset& data, const MlpSettings& mlp,
                              const WeightedObjective& w = {});

} // namespace fafs
