#pragma once

#include <string>
#include <vector>

#include "brnet/mlp.hpp"
#include "brnet/neuron.hpp"

namespace brnet {

/// Training objective family: plain utility maximization, the per-neuron
/// information cost, or the single network-wide information cost.
enum class RegMode { Umax, Lrdi, Grdi };

std::string to_string(RegMode mode);
RegMode reg_mode_from_string(const std::string& name);

/// beta == 0 is the degenerate path with the information term switched off;
/// Umax ignores beta entirely and behaves exactly like that path.
struct RegularizerConfig {
    RegMode mode = RegMode::Umax;
    double beta = 0.0;
    double tau = 1000.0;
    double epsilon = kRateEpsilon;

    void validate() const;
    double effective_beta() const { return mode == RegMode::Umax ? 0.0 : beta; }
};

/// Exponential-window rate averages: one value per hidden neuron (phi_bar)
/// and one per output unit (f_bar), sharing a single time constant. The bank
/// warms up on the first observed trace by copying its rates, so the first
/// log never sees an uninitialized mean.
class MeanBank {
public:
    MeanBank(const std::vector<std::size_t>& arch, double tau);

    bool warmed() const { return warmed_; }
    double tau() const { return tau_; }

    /// Copy rates on the first call, exponential-window update afterwards.
    void observe(const ForwardTrace& trace);

    double hidden_mean(std::size_t hidden_layer, std::size_t i) const {
        return hidden_[hidden_layer][i];
    }
    double output_mean(std::size_t j) const { return output_[j]; }
    const std::vector<std::vector<double>>& hidden() const { return hidden_; }
    const std::vector<double>& output() const { return output_; }

    /// Overwrite stored values (checkpoint restore, test setup).
    void set_state(std::vector<std::vector<double>> hidden, std::vector<double> output,
                   bool warmed);

private:
    std::vector<std::vector<double>> hidden_;
    std::vector<double> output_;
    double tau_;
    bool warmed_ = false;
};

/// Negative cross entropy utility of one example: ln max(f_label, eps).
double utility_cross_entropy(const ForwardTrace& trace, std::size_t label, double eps);

/// dU/df for the cross entropy utility: delta_{j,label} / max(f_label, eps).
std::vector<double> utility_output_delta(const ForwardTrace& trace, std::size_t label,
                                         double eps);

/// Backprop seed for the network-wide information cost:
/// (1-beta) dU/df_j - beta [ln max(f_j, eps) - ln max(fbar_j, eps)].
std::vector<double> grdi_output_delta(const ForwardTrace& trace, std::size_t label, double beta,
                                      const MeanBank& means, double eps);

/// Full parameter derivative for the per-neuron information cost: the shared
/// utility part scaled by (1-beta) plus each hidden neuron's local term
/// -beta xi_i phi' [ln max(phi, eps) - ln max(phibar, eps)]. Output units are
/// softmax-coupled and carry no local term.
Gradients lrdi_gradient(const NetworkParams& params, const ForwardTrace& trace,
                        std::size_t label, double beta, const MeanBank& means, double eps);

/// Batch estimate of I(input; output): mean over traces of
/// sum_j f_j [ln max(f_j, eps) - ln max(fbar_j, eps)].
double global_mi_estimate(const std::vector<ForwardTrace>& traces, const MeanBank& means,
                          double eps);

/// Shannon entropy -sum_j f_j ln max(f_j, eps) of one output distribution.
double output_entropy(const std::vector<double>& f, double eps);

}  // namespace brnet
