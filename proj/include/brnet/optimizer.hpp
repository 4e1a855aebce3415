#pragma once

#include <cstdint>

#include "brnet/mlp.hpp"

namespace brnet {

struct OptimizerConfig {
    double alpha = 0.01;   // learning rate
    double gamma = 0.9;    // momentum
    double eta = 0.002;    // learning rate decay per epoch
    std::size_t epochs = 70;
    std::uint64_t seed = 1;

    void validate() const;
};

/// One ascent step: v <- gamma v + (1-gamma) g, then w <- w + alpha v.
/// The objective is maximized. Non-finite gradient entries abort with the
/// offending layer and index.
void sgd_momentum_step(NetworkParams& params, Velocity& velocity, const Gradients& grad,
                       double alpha, double gamma);

/// Decayed learning rate alpha / (1 + t * eta), applied once after epoch t
/// (t counts from 1).
double lr_decay(double alpha, std::size_t t, double eta);

}  // namespace brnet
