#include "brnet/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace brnet {

void OptimizerConfig::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("OptimizerConfig: alpha must be > 0");
    if (!(gamma >= 0.0) || gamma >= 1.0) {
        throw std::invalid_argument("OptimizerConfig: gamma must lie in [0, 1)");
    }
    if (!(eta >= 0.0)) throw std::invalid_argument("OptimizerConfig: eta must be >= 0");
}

void sgd_momentum_step(NetworkParams& params, Velocity& velocity, const Gradients& grad,
                       double alpha, double gamma) {
    if (velocity.layers.size() != params.layers.size() ||
        grad.layers.size() != params.layers.size()) {
        throw std::invalid_argument("sgd_momentum_step: layer count mismatch");
    }
    const double take = 1.0 - gamma;
    for (std::size_t l = 0; l < params.layers.size(); ++l) {
        Layer& w = params.layers[l];
        Layer& v = velocity.layers[l];
        const Layer& g = grad.layers[l];
        if (v.weights.size() != w.weights.size() || g.weights.size() != w.weights.size()) {
            throw std::invalid_argument("sgd_momentum_step: shape mismatch");
        }
        bool finite = true;
        for (std::size_t k = 0; k < w.weights.size(); ++k) {
            const double gk = g.weights[k];
            finite &= std::isfinite(gk);
            v.weights[k] = gamma * v.weights[k] + take * gk;
            w.weights[k] += alpha * v.weights[k];
        }
        for (std::size_t k = 0; k < w.bias.size(); ++k) {
            const double gk = g.bias[k];
            finite &= std::isfinite(gk);
            v.bias[k] = gamma * v.bias[k] + take * gk;
            w.bias[k] += alpha * v.bias[k];
        }
        if (!finite) {
            std::size_t bad = 0;
            for (std::size_t k = 0; k < g.weights.size(); ++k) {
                if (!std::isfinite(g.weights[k])) { bad = k; break; }
            }
            throw std::runtime_error("sgd_momentum_step: non-finite gradient in layer " +
                                     std::to_string(l) + " near index " + std::to_string(bad));
        }
    }
}

double lr_decay(double alpha, std::size_t t, double eta) {
    if (t < 1) throw std::invalid_argument("lr_decay: epoch index starts at 1");
    if (!(eta >= 0.0)) throw std::invalid_argument("lr_decay: eta must be >= 0");
    return alpha / (1.0 + static_cast<double>(t) * eta);
}

}  // namespace brnet
