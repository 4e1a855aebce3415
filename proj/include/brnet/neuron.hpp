#pragma once

#include <vector>

#include "brnet/activation.hpp"
#include "brnet/distribution.hpp"
#include "brnet/running_mean.hpp"

namespace brnet {

using SynapticWeights = std::vector<double>;

/// Sampled presynaptic inputs, each weighted equally (empirical input
/// distribution). Entries must be nonempty and share one dimension.
class EnvironmentBatch {
public:
    explicit EnvironmentBatch(std::vector<std::vector<double>> inputs);

    std::size_t size() const { return inputs_.size(); }
    std::size_t dim() const { return inputs_.front().size(); }
    const std::vector<double>& input(std::size_t i) const { return inputs_[i]; }

private:
    std::vector<std::vector<double>> inputs_;
};

/// Machine epsilon; the clamp floor for logarithms of rates.
inline constexpr double kRateEpsilon = 2.220446049250313e-16;

/// Firing probability rho(w^T x) of the stochastic binary neuron.
double stochastic_policy(const SynapticWeights& w, const std::vector<double>& x,
                         const Activation& act);

/// Instantaneous information cost ln(p(y|x)/p(y)) of a binary firing state:
/// y ln(rho/rho_bar) + (1-y) ln((1-rho)/(1-rho_bar)). Arguments must lie
/// strictly inside (0, 1); callers clamp.
double stochastic_info_cost(double rho, double rho_bar, int y);

/// Averaged weight update for the stochastic neuron: per component i,
/// < x_i rho' [ (1-beta) dU - beta ln(rho(1-rho_bar)/(rho_bar(1-rho))) ] >
/// over the batch. delta_u[k] is U(x_k, 1) - U(x_k, 0).
std::vector<double> stochastic_gradient(const SynapticWeights& w, const EnvironmentBatch& batch,
                                        const std::vector<double>& delta_u, TradeoffBeta beta,
                                        double rho_bar, const Activation& act);

/// Mutual information rate < phi ln(phi/phi_bar) > in nats per unit time,
/// with both logs clamped below by eps.
double deterministic_mi_rate(const SynapticWeights& w, const EnvironmentBatch& batch,
                             double phi_bar, const Activation& act,
                             double eps = kRateEpsilon);

/// Averaged weight update for the deterministic rate neuron: per component i,
/// < xi_i phi' [ (1-beta) dU/dphi - beta ln(phi/phi_bar) ] > over the batch.
std::vector<double> deterministic_gradient(const SynapticWeights& w,
                                           const EnvironmentBatch& batch,
                                           const std::vector<double>& du_dphi, TradeoffBeta beta,
                                           double phi_bar, const Activation& act,
                                           double eps = kRateEpsilon);

}  // namespace brnet
