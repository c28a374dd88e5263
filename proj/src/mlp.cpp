#include "fafs/mlp.hpp"

#include "fafs/error.hpp"
#include "fafs/rng.hpp"

#include <cmath>
#include <string>

namespace fafs {

std::vector<double> MlpParameters::flatten() const {
    std::vector<double> flat;
    flat.reserve(size());
    flat.insert(flat.end(), w1.begin(), w1.end());
    flat.insert(flat.end(), b1.begin(), b1.end());
    flat.insert(flat.end(), w2.begin(), w2.end());
    flat.push_back(b2);
    return flat;
}

void MlpParameters::assign(const std::vector<double>& flat) {
    if (flat.size() != size()) throw PreconditionError("parameter vector has the wrong length");
    auto it = flat.begin();
    for (auto* v : {&w1, &b1, &w2})
        for (double& x : *v) x = *it++;
    b2 = *it;
}

MlpModel MlpModel::zeros(std::size_t n_inputs, std::size_t n_hidden) {
    MlpModel m;
    m.n_inputs = n_inputs;
    m.n_hidden = n_hidden;
    m.params.w1.assign(n_inputs * n_hidden, 0.0);
    m.params.b1.assign(n_hidden, 0.0);
    m.params.w2.assign(n_hidden, 0.0);
    return m;
}

MlpModel MlpModel::random(std::size_t n_inputs, std::size_t n_hidden, double range, std::uint64_t seed) {
    MlpModel m = zeros(n_inputs, n_hidden);
    Rng rng(seed);
    auto draw = [&] { return rng.uniform(-range, range); };
    for (auto* v : {&m.params.w1, &m.params.b1, &m.params.w2})
        for (double& x : *v) x = draw();
    m.params.b2 = draw();
    return m;
}

void TrainConfig::validate() const {
    if (epochs < 1) throw ConfigError("MLP epochs must be >= 1, got " + std::to_string(epochs));
    if (!(learning_rate > 0.0)) throw ConfigError("MLP learning rate must be > 0");
    if (!(momentum >= 0.0 && momentum < 1.0)) throw ConfigError("MLP momentum must lie in [0, 1)");
    if (!(init_range > 0.0)) throw ConfigError("MLP init range must be > 0");
}

std::size_t hidden_size(std::size_t n_inputs, std::size_t n_outputs, double c) {
    const double base = std::round(std::sqrt(static_cast<double>(n_inputs + n_outputs)));
    const double n = std::round(base + c);
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

namespace {

void check_width(const MlpModel& model, std::size_t width) {
    if (width != model.n_inputs)
        throw PreconditionError("input width " + std::to_string(width) + " does not match model width " +
                                std::to_string(model.n_inputs));
}

// Forward pass that keeps the hidden activations for backprop.
double forward(const MlpModel& m, std::span<const double> x, std::vector<double>& hidden) {
    const auto& p = m.params;
    double out = p.b2;
    for (std::size_t j = 0; j < m.n_hidden; ++j) {
        const double* w = p.w1.data() + j * m.n_inputs;
        double a = p.b1[j];
        for (std::size_t k = 0; k < m.n_inputs; ++k) a += w[k] * x[k];
        hidden[j] = std::tanh(a);
        out += p.w2[j] * hidden[j];
    }
    return out;
}

// Gradient of mean((pred - y)^2) accumulated into `g`; returns the loss.
double loss_and_gradient(const MlpModel& m, const Dataset& d, std::span<const double> target,
                         MlpParameters& g) {
    g.w1.assign(m.params.w1.size(), 0.0);
    g.b1.assign(m.params.b1.size(), 0.0);
    g.w2.assign(m.params.w2.size(), 0.0);
    g.b2 = 0.0;
    std::vector<double> hidden(m.n_hidden);
    const double inv_n = 1.0 / static_cast<double>(d.rows());
    double loss = 0.0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
        const auto x = d.row(r);
        const double err = forward(m, x, hidden) - target[r];
        loss += err * err;
        const double dout = 2.0 * err * inv_n;
        g.b2 += dout;
        for (std::size_t j = 0; j < m.n_hidden; ++j) {
            g.w2[j] += dout * hidden[j];
            const double dz = dout * m.params.w2[j] * (1.0 - hidden[j] * hidden[j]);
            g.b1[j] += dz;
            double* gw = g.w1.data() + j * m.n_inputs;
            for (std::size_t k = 0; k < m.n_inputs; ++k) gw[k] += dz * x[k];
        }
    }
    return loss * inv_n;
}

} // namespace

double predict_one(const MlpModel& model, std::span<const double> x) {
    check_width(model, x.size());
    std::vector<double> hidden(model.n_hidden);
    return forward(model, x, hidden);
}

std::vector<double> predict(const MlpModel& model, const Dataset& rows) {
    check_width(model, rows.cols());
    std::vector<double> out(rows.rows());
    std::vector<double> hidden(model.n_hidden);
    for (std::size_t r = 0; r < rows.rows(); ++r) out[r] = forward(model, rows.row(r), hidden);
    return out;
}

double mse(const MlpModel& model, const Dataset& data) {
    const auto pred = predict(model, data);
    double s = 0.0;
    for (std::size_t r = 0; r < pred.size(); ++r) {
        const double e = pred[r] - data.target()[r];
        s += e * e;
    }
    return s / static_cast<double>(pred.size());
}

MlpParameters gradient(const MlpModel& model, const Dataset& batch) {
    check_width(model, batch.cols());
    if (batch.rows() == 0) throw PreconditionError("gradient needs a non-empty batch");
    MlpParameters g;
    loss_and_gradient(model, batch, batch.target(), g);
    return g;
}

MlpModel train(const Dataset& data, std::size_t n_hidden, const TrainConfig& config,
               std::vector<double>* loss_trace) {
    config.validate();
    if (data.rows() == 0) throw PreconditionError("cannot train on an empty dataset");
    if (n_hidden < 1) throw PreconditionError("hidden layer needs at least one unit");

    double mean = 0.0;
    for (double y : data.target()) mean += y;
    mean /= static_cast<double>(data.rows());
    double var = 0.0;
    for (double y : data.target()) var += (y - mean) * (y - mean);
    double scale = std::sqrt(var / static_cast<double>(data.rows()));
    if (!(scale > 0.0)) scale = 1.0;
    std::vector<double> z(data.rows());
    for (std::size_t r = 0; r < z.size(); ++r) z[r] = (data.target()[r] - mean) / scale;

    MlpModel model = MlpModel::random(data.cols(), n_hidden, config.init_range, config.seed);
    std::vector<double> theta = model.params.flatten();
    std::vector<double> velocity(theta.size(), 0.0);
    std::vector<double> best = theta;
    double best_loss = INFINITY;
    MlpParameters g;

    if (loss_trace) loss_trace->clear();
    for (int epoch = 0; epoch <= config.epochs; ++epoch) {
        model.params.assign(theta);
        const double loss = loss_and_gradient(model, data, z, g);
        if (!std::isfinite(loss))
            throw TrainingError("MLP loss became non-finite at epoch " + std::to_string(epoch) +
                                "; learning rate " + std::to_string(config.learning_rate) + " is too high");
        if (loss_trace) loss_trace->push_back(loss * scale * scale);
        if (loss < best_loss) {
            best_loss = loss;
            best = theta;
        }
        if (epoch == config.epochs) break;
        const auto grad = g.flatten();
        for (std::size_t i = 0; i < theta.size(); ++i) {
            velocity[i] = config.momentum * velocity[i] - config.learning_rate * grad[i];
            theta[i] += velocity[i];
        }
    }

    model.params.assign(best);
    for (double& w : model.params.w2) w *= scale;
    model.params.b2 = model.params.b2 * scale + mean;
    return model;
}

} // namespace fafs
