#pragma once

#include <string>

#include "brnet/mlp.hpp"
#include "brnet/regularizer.hpp"

namespace brnet {

/// Versioned JSON container for everything needed to resume or evaluate a
/// run: weights, biases, mean bank, optimizer velocity, epoch counter and
/// the serialized RNG stream state.
struct Checkpoint {
    static constexpr int kVersion = 1;

    NetworkParams params;
    Velocity velocity;
    std::vector<std::vector<double>> mean_hidden;
    std::vector<double> mean_output;
    bool means_warmed = false;
    double tau = 1000.0;
    std::size_t epoch = 0;
    std::string rng_state;
    std::string mode = "umax";
    double beta = 0.0;
    double alpha_current = 0.0;
};

void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace brnet
