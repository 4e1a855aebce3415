#include "brnet/neuron.hpp"

#include <cmath>
#include <stdexcept>

namespace brnet {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("neuron: weight/input dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double clamped_log(double v, double eps) { return std::log(v > eps ? v : eps); }

}  // namespace

EnvironmentBatch::EnvironmentBatch(std::vector<std::vector<double>> inputs)
    : inputs_(std::move(inputs)) {
    if (inputs_.empty()) throw std::invalid_argument("EnvironmentBatch: empty batch");
    for (const auto& v : inputs_) {
        if (v.size() != inputs_.front().size()) {
            throw std::invalid_argument("EnvironmentBatch: ragged input dimensions");
        }
    }
}

double stochastic_policy(const SynapticWeights& w, const std::vector<double>& x,
                         const Activation& act) {
    return act.eval(dot(w, x));
}

double stochastic_info_cost(double rho, double rho_bar, int y) {
    if (!(rho > 0.0 && rho < 1.0) || !(rho_bar > 0.0 && rho_bar < 1.0)) {
        throw std::domain_error("stochastic_info_cost: rates must lie strictly inside (0, 1)");
    }
    return y == 1 ? std::log(rho / rho_bar) : std::log((1.0 - rho) / (1.0 - rho_bar));
}

std::vector<double> stochastic_gradient(const SynapticWeights& w, const EnvironmentBatch& batch,
                                        const std::vector<double>& delta_u, TradeoffBeta beta,
                                        double rho_bar, const Activation& act) {
    if (delta_u.size() != batch.size()) {
        throw std::invalid_argument("stochastic_gradient: one dU per batch input required");
    }
    if (!(rho_bar > 0.0 && rho_bar < 1.0)) {
        throw std::domain_error("stochastic_gradient: rho_bar must lie strictly inside (0, 1)");
    }
    const double b = beta.value();
    std::vector<double> grad(w.size(), 0.0);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        if (!std::isfinite(delta_u[k])) {
            throw std::invalid_argument("stochastic_gradient: non-finite utility difference");
        }
        const std::vector<double>& x = batch.input(k);
        const double a = dot(w, x);
        const double rho = act.eval(a);
        const double slope = act.deriv(a);
        const double info = std::log(rho * (1.0 - rho_bar) / (rho_bar * (1.0 - rho)));
        const double factor = slope * ((1.0 - b) * delta_u[k] - b * info);
        for (std::size_t i = 0; i < w.size(); ++i) grad[i] += x[i] * factor;
    }
    for (double& g : grad) g /= static_cast<double>(batch.size());
    return grad;
}

double deterministic_mi_rate(const SynapticWeights& w, const EnvironmentBatch& batch,
                             double phi_bar, const Activation& act, double eps) {
    if (!(phi_bar > 0.0)) {
        throw std::domain_error("deterministic_mi_rate: phi_bar must be positive");
    }
    const double log_bar = clamped_log(phi_bar, eps);
    double acc = 0.0;
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const double phi = act.eval(dot(w, batch.input(k)));
        acc += phi * (clamped_log(phi, eps) - log_bar);
    }
    return acc / static_cast<double>(batch.size());
}

std::vector<double> deterministic_gradient(const SynapticWeights& w,
                                           const EnvironmentBatch& batch,
                                           const std::vector<double>& du_dphi, TradeoffBeta beta,
                                           double phi_bar, const Activation& act, double eps) {
    if (du_dphi.size() != batch.size()) {
        throw std::invalid_argument("deterministic_gradient: one dU/dphi per batch input required");
    }
    if (!(phi_bar > 0.0)) {
        throw std::domain_error("deterministic_gradient: phi_bar must be positive");
    }
    const double b = beta.value();
    const double log_bar = clamped_log(phi_bar, eps);
    std::vector<double> grad(w.size(), 0.0);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        const std::vector<double>& xi = batch.input(k);
        const double a = dot(w, xi);
        const double phi = act.eval(a);
        const double slope = act.deriv(a);
        const double info = clamped_log(phi, eps) - log_bar;
        const double factor = slope * ((1.0 - b) * du_dphi[k] - b * info);
        for (std::size_t i = 0; i < w.size(); ++i) grad[i] += xi[i] * factor;
    }
    for (double& g : grad) g /= static_cast<double>(batch.size());
    return grad;
}

}  // namespace brnet
