#pragma once

#include <cstdint>
#include <vector>

namespace brnet {

/// One dense layer. Weights are row-major: row i holds the presynaptic
/// weights of neuron i, so weights[i * in + j] connects input j to neuron i.
struct Layer {
    std::size_t in = 0;
    std::size_t out = 0;
    std::vector<double> weights;
    std::vector<double> bias;
};

/// Layered weights and biases of a feedforward perceptron with
/// rectified-linear hidden layers and a softmax output layer.
struct NetworkParams {
    std::vector<Layer> layers;

    static NetworkParams zeros(const std::vector<std::size_t>& arch);
    std::vector<std::size_t> architecture() const;
    std::size_t input_dim() const { return layers.front().in; }
    std::size_t output_dim() const { return layers.back().out; }
    std::size_t hidden_layer_count() const { return layers.size() - 1; }
    void validate() const;
};

/// Gradients and momentum buffers share the parameter layout.
using Gradients = NetworkParams;
using Velocity = NetworkParams;

/// Everything one pass produces: per-layer pre-activations and rates.
/// rates[0] is the input; rates.back() is the softmax output f.
struct ForwardTrace {
    std::vector<std::vector<double>> pre;    // pre[l]: pre-activations of layer l
    std::vector<std::vector<double>> rates;  // rates[l + 1]: rates of layer l
    const std::vector<double>& output() const { return rates.back(); }
    const std::vector<double>& layer_input(std::size_t l) const { return rates[l]; }
};

/// Forward pass. Inputs must match the first layer; activations are checked
/// for finiteness. Softmax is computed with max-shifted exponentials.
ForwardTrace forward(const NetworkParams& params, const std::vector<double>& input);

/// Reusable-buffer variant for tight training loops.
void forward_into(const NetworkParams& params, const std::vector<double>& input,
                  ForwardTrace& trace);

/// Backpropagate an objective derivative taken with respect to the output
/// rates f through the softmax and the rectified-linear layers. Returns the
/// derivative of the objective with respect to every weight and bias.
Gradients backprop(const NetworkParams& params, const ForwardTrace& trace,
                   const std::vector<double>& output_delta);

void backprop_into(const NetworkParams& params, const ForwardTrace& trace,
                   const std::vector<double>& output_delta, Gradients& grad);

/// Uniform init in (-n^-0.5, n^-0.5) per neuron with n presynaptic inputs;
/// the bias draws from the same range. Deterministic per seed.
NetworkParams init_weights(const std::vector<std::size_t>& arch, std::uint64_t seed);

/// Rescale any neuron whose presynaptic weight norm exceeds `cap` back onto
/// the cap. Biases are left untouched. Idempotent.
void max_norm_project(NetworkParams& params, double cap);

}  // namespace brnet
