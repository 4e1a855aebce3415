#include "brnet/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace brnet {

namespace {

double clamped_log(double v, double eps) { return std::log(v > eps ? v : eps); }

/// Per-example information cost of the active mode, for progress reporting.
double info_cost(const RegularizerConfig& reg, const ForwardTrace& trace, const MeanBank& means) {
    const double eps = reg.epsilon;
    switch (reg.mode) {
        case RegMode::Umax:
            return 0.0;
        case RegMode::Grdi: {
            double acc = 0.0;
            const std::vector<double>& f = trace.output();
            for (std::size_t j = 0; j < f.size(); ++j) {
                acc += f[j] * (clamped_log(f[j], eps) - clamped_log(means.output_mean(j), eps));
            }
            return acc;
        }
        case RegMode::Lrdi: {
            double acc = 0.0;
            for (std::size_t l = 0; l + 1 < trace.pre.size(); ++l) {
                const std::vector<double>& phi = trace.rates[l + 1];
                for (std::size_t i = 0; i < phi.size(); ++i) {
                    acc += phi[i] *
                           (clamped_log(phi[i], eps) - clamped_log(means.hidden_mean(l, i), eps));
                }
            }
            return acc;
        }
    }
    return 0.0;
}

}  // namespace

std::size_t predicted_class(const std::vector<double>& f) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < f.size(); ++j) {
        if (f[j] > f[best]) best = j;
    }
    return best;
}

EvalMetrics evaluate(const NetworkParams& params, const LabeledDataset& data, double eps) {
    data.validate();
    if (data.class_count != params.output_dim()) {
        throw std::invalid_argument("evaluate: dataset classes do not match network outputs");
    }
    EvalMetrics m;
    std::vector<double> mean_f(params.output_dim(), 0.0);
    double sum_f_log_f = 0.0;
    ForwardTrace trace;
    for (std::size_t i = 0; i < data.size(); ++i) {
        forward_into(params, data.images[i], trace);
        const std::vector<double>& f = trace.output();
        m.utility += clamped_log(f[data.labels[i]], eps);
        if (predicted_class(f) != data.labels[i]) m.error += 1.0;
        m.mean_entropy += output_entropy(f, eps);
        for (std::size_t j = 0; j < f.size(); ++j) {
            mean_f[j] += f[j];
            sum_f_log_f += f[j] * clamped_log(f[j], eps);
        }
    }
    const double n = static_cast<double>(data.size());
    m.utility /= n;
    m.error /= n;
    m.mean_entropy /= n;
    double cross = 0.0;
    for (double& v : mean_f) {
        v /= n;
        cross += v * clamped_log(v, eps);
    }
    m.global_mi = sum_f_log_f / n - cross;
    return m;
}

TrainStats train_epoch(NetworkParams& params, Velocity& velocity, MeanBank& means,
                       const LabeledDataset& data, const RegularizerConfig& reg, double alpha,
                       double gamma, std::mt19937_64& rng, std::optional<double> max_norm_cap) {
    data.validate();
    reg.validate();
    if (data.class_count != params.output_dim()) {
        throw std::invalid_argument("train_epoch: dataset classes do not match network outputs");
    }
    if (reg.mode != RegMode::Umax && means.tau() != reg.tau) {
        throw std::invalid_argument("train_epoch: mean bank and regularizer disagree on tau");
    }
    const double eps = reg.epsilon;
    const double beta = reg.effective_beta();

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    TrainStats stats;
    ForwardTrace trace;
    Gradients grad = NetworkParams::zeros(params.architecture());
    for (std::size_t step = 0; step < order.size(); ++step) {
        const std::size_t idx = order[step];
        try {
            forward_into(params, data.images[idx], trace);
        } catch (const std::runtime_error& e) {
            throw TrainingDivergence(step, std::string("divergence at example ") +
                                               std::to_string(step) + ": " + e.what());
        }
        const std::size_t label = data.labels[idx];
        const double utility = utility_cross_entropy(trace, label, eps);
        if (!std::isfinite(utility)) {
            throw TrainingDivergence(step, "divergence at example " + std::to_string(step) +
                                               ": non-finite utility");
        }

        const bool was_warmed = means.warmed();
        if (!was_warmed && reg.mode != RegMode::Umax) means.observe(trace);

        switch (reg.mode) {
            case RegMode::Umax:
                backprop_into(params, trace, utility_output_delta(trace, label, eps), grad);
                break;
            case RegMode::Grdi:
                backprop_into(params, trace, grdi_output_delta(trace, label, beta, means, eps),
                              grad);
                break;
            case RegMode::Lrdi:
                grad = lrdi_gradient(params, trace, label, beta, means, eps);
                break;
        }

        stats.mean_utility += utility;
        if (predicted_class(trace.output()) != label) stats.error += 1.0;
        if (reg.mode != RegMode::Umax) stats.mean_info_cost += info_cost(reg, trace, means);

        try {
            sgd_momentum_step(params, velocity, grad, alpha, gamma);
        } catch (const std::runtime_error& e) {
            throw TrainingDivergence(step, std::string("divergence at example ") +
                                               std::to_string(step) + ": " + e.what());
        }
        if (max_norm_cap) max_norm_project(params, *max_norm_cap);

        if (was_warmed && reg.mode != RegMode::Umax) means.observe(trace);
    }

    const double n = static_cast<double>(order.size());
    stats.mean_utility /= n;
    stats.error /= n;
    stats.mean_info_cost /= n;
    stats.examples = order.size();
    return stats;
}

}  // namespace brnet
