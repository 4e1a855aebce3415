#pragma once

#include <optional>
#include <random>
#include <stdexcept>

#include "brnet/dataset.hpp"
#include "brnet/optimizer.hpp"
#include "brnet/regularizer.hpp"

namespace brnet {

/// Raised when a training step produces a non-finite utility or activation;
/// carries the index of the offending example within the epoch.
class TrainingDivergence : public std::runtime_error {
public:
    TrainingDivergence(std::size_t example_index, const std::string& what)
        : std::runtime_error(what), example_index_(example_index) {}
    std::size_t example_index() const { return example_index_; }

private:
    std::size_t example_index_;
};

/// Running averages accumulated while sweeping the epoch (params change
/// between examples, so these are online views, not a fixed-parameter
/// evaluation).
struct TrainStats {
    double mean_utility = 0.0;
    double error = 0.0;
    double mean_info_cost = 0.0;  // the active mode's per-example information cost
    std::size_t examples = 0;
};

/// Fixed-parameter metrics over a dataset in natural order. global_mi uses
/// the batch mean of the outputs as the marginal.
struct EvalMetrics {
    double utility = 0.0;
    double error = 0.0;
    double global_mi = 0.0;
    double mean_entropy = 0.0;
};

/// Index of the largest output; ties resolve to the lowest index.
std::size_t predicted_class(const std::vector<double>& f);

EvalMetrics evaluate(const NetworkParams& params, const LabeledDataset& data, double eps);

/// One shuffled pass of online gradient ascent. Per example: forward, the
/// mode's gradient with frozen means, momentum step, optional max-norm
/// projection, then the running-mean update with pre-update rates. The mean
/// bank warms up from the first forward pass of the run.
TrainStats train_epoch(NetworkParams& params, Velocity& velocity, MeanBank& means,
                       const LabeledDataset& data, const RegularizerConfig& reg, double alpha,
                       double gamma, std::mt19937_64& rng,
                       std::optional<double> max_norm_cap = std::nullopt);

}  // namespace brnet
