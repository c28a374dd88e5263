#pragma once

#include "fafs/dataset.hpp"

#include <cstdint>
#include <vector>

namespace fafs {

/// Weights of a one-hidden-layer network with a single linear output.
struct MlpParameters {
    std::vector<double> w1; // n_hidden x n_inputs, row-major
    std::vector<double> b1; // n_hidden
    std::vector<double> w2; // n_hidden
    double b2 = 0.0;

    std::vector<double> flatten() const;
    void assign(const std::vector<double>& flat);
    std::size_t size() const noexcept { return w1.size() + b1.size() + w2.size() + 1; }
};

/// tanh hidden layer, identity output.
struct MlpModel {
    std::size_t n_inputs = 0;
    std::size_t n_hidden = 0;
    MlpParameters params;

    static MlpModel zeros(std::size_t n_inputs, std::size_t n_hidden);
    /// Weights uniform in [-range, range].
    static MlpModel random(std::size_t n_inputs, std::size_t n_hidden, double range, std::uint64_t seed);
};

struct TrainConfig {
    int epochs = 200;
    double learning_rate = 0.01;
    double momentum = 0.9;
    double init_range = 0.5;
    std::uint64_t seed = 0;

    /// Throws ConfigError on epochs < 1, learning_rate <= 0, momentum outside [0,1).
    void validate() const;
};

/// round(round(sqrt(n_inputs + n_outputs)) + c), at least 1.
std::size_t hidden_size(std::size_t n_inputs, std::size_t n_outputs, double c);

double predict_one(const MlpModel& model, std::span<const double> x);
std::vector<double> predict(const MlpModel& model, const Dataset& rows);

/// Mean squared error of the model on `data`.
double mse(const MlpModel& model, const Dataset& data);

/// Backpropagated gradient of the batch mean squared error.
MlpParameters gradient(const MlpModel& model, const Dataset& batch);

/// Full-batch gradient descent with momentum on MSE. The target is
/// standardized during training and the scaling folded back into the output
/// layer, so the returned model predicts in target units. Returns the
/// lowest-loss iterate, never worse than the initial weights. Throws
/// TrainingError if the loss becomes non-finite.
MlpModel train(const Dataset& data, std::size_t n_hidden, const TrainConfig& config,
               std::vector<double>* loss_trace = nullptr);

} // namespace fafs
