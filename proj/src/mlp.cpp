#include "brnet/mlp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace brnet {

NetworkParams NetworkParams::zeros(const std::vector<std::size_t>& arch) {
    if (arch.size() < 2) throw std::invalid_argument("NetworkParams: need at least two layers");
    NetworkParams p;
    p.layers.reserve(arch.size() - 1);
    for (std::size_t l = 0; l + 1 < arch.size(); ++l) {
        if (arch[l] == 0 || arch[l + 1] == 0) {
            throw std::invalid_argument("NetworkParams: zero-width layer");
        }
        Layer layer;
        layer.in = arch[l];
        layer.out = arch[l + 1];
        layer.weights.assign(layer.in * layer.out, 0.0);
        layer.bias.assign(layer.out, 0.0);
        p.layers.push_back(std::move(layer));
    }
    return p;
}

std::vector<std::size_t> NetworkParams::architecture() const {
    std::vector<std::size_t> arch;
    arch.reserve(layers.size() + 1);
    arch.push_back(layers.front().in);
    for (const Layer& l : layers) arch.push_back(l.out);
    return arch;
}

void NetworkParams::validate() const {
    if (layers.empty()) throw std::invalid_argument("NetworkParams: no layers");
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const Layer& layer = layers[l];
        if (layer.weights.size() != layer.in * layer.out || layer.bias.size() != layer.out) {
            throw std::invalid_argument("NetworkParams: buffer sizes do not match dimensions");
        }
        if (l > 0 && layers[l - 1].out != layer.in) {
            throw std::invalid_argument("NetworkParams: adjacent layer dimensions do not chain");
        }
        for (double w : layer.weights) {
            if (!std::isfinite(w)) throw std::invalid_argument("NetworkParams: non-finite weight");
        }
        for (double b : layer.bias) {
            if (!std::isfinite(b)) throw std::invalid_argument("NetworkParams: non-finite bias");
        }
    }
}

void forward_into(const NetworkParams& params, const std::vector<double>& input,
                  ForwardTrace& trace) {
    const std::size_t L = params.layers.size();
    if (input.size() != params.input_dim()) {
        throw std::invalid_argument("forward: input dimension mismatch");
    }
    trace.pre.resize(L);
    trace.rates.resize(L + 1);
    trace.rates[0] = input;
    for (std::size_t l = 0; l < L; ++l) {
        const Layer& layer = params.layers[l];
        const std::vector<double>& in = trace.rates[l];
        std::vector<double>& pre = trace.pre[l];
        std::vector<double>& out = trace.rates[l + 1];
        pre.resize(layer.out);
        out.resize(layer.out);
        for (std::size_t i = 0; i < layer.out; ++i) {
            const double* wrow = layer.weights.data() + i * layer.in;
            double a = layer.bias[i];
            for (std::size_t j = 0; j < layer.in; ++j) a += wrow[j] * in[j];
            pre[i] = a;
        }
        if (l + 1 < L) {
            for (std::size_t i = 0; i < layer.out; ++i) {
                out[i] = pre[i] > 0.0 ? pre[i] : 0.0;
            }
        } else {
            double m = pre[0];
            for (std::size_t i = 1; i < layer.out; ++i) m = std::max(m, pre[i]);
            if (!std::isfinite(m)) throw std::runtime_error("forward: non-finite pre-activation");
            double z = 0.0;
            for (std::size_t i = 0; i < layer.out; ++i) {
                out[i] = std::exp(pre[i] - m);
                z += out[i];
            }
            for (std::size_t i = 0; i < layer.out; ++i) out[i] /= z;
        }
    }
}

ForwardTrace forward(const NetworkParams& params, const std::vector<double>& input) {
    ForwardTrace trace;
    forward_into(params, input, trace);
    return trace;
}

void backprop_into(const NetworkParams& params, const ForwardTrace& trace,
                   const std::vector<double>& output_delta, Gradients& grad) {
    const std::size_t L = params.layers.size();
    if (output_delta.size() != params.output_dim()) {
        throw std::invalid_argument("backprop: output delta dimension mismatch");
    }
    if (grad.layers.size() != L) grad = NetworkParams::zeros(params.architecture());

    // Softmax Jacobian: d/da_j = f_j (delta_j - sum_k delta_k f_k).
    const std::vector<double>& f = trace.output();
    double inner = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) inner += output_delta[j] * f[j];
    std::vector<double> delta(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) delta[j] = f[j] * (output_delta[j] - inner);

    for (std::size_t l = L; l-- > 0;) {
        const Layer& layer = params.layers[l];
        Layer& g = grad.layers[l];
        const std::vector<double>& in = trace.layer_input(l);
        for (std::size_t i = 0; i < layer.out; ++i) {
            double* grow = g.weights.data() + i * layer.in;
            const double d = delta[i];
            for (std::size_t j = 0; j < layer.in; ++j) grow[j] = d * in[j];
            g.bias[i] = d;
        }
        if (l > 0) {
            std::vector<double> prev(layer.in, 0.0);
            for (std::size_t i = 0; i < layer.out; ++i) {
                const double* wrow = layer.weights.data() + i * layer.in;
                const double d = delta[i];
                if (d == 0.0) continue;
                for (std::size_t j = 0; j < layer.in; ++j) prev[j] += wrow[j] * d;
            }
            const std::vector<double>& pre_prev = trace.pre[l - 1];
            for (std::size_t j = 0; j < layer.in; ++j) {
                if (pre_prev[j] <= 0.0) prev[j] = 0.0;
            }
            delta = std::move(prev);
        }
    }
}

Gradients backprop(const NetworkParams& params, const ForwardTrace& trace,
                   const std::vector<double>& output_delta) {
    Gradients grad = NetworkParams::zeros(params.architecture());
    backprop_into(params, trace, output_delta, grad);
    return grad;
}

NetworkParams init_weights(const std::vector<std::size_t>& arch, std::uint64_t seed) {
    NetworkParams p = NetworkParams::zeros(arch);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Layer& layer : p.layers) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(layer.in));
        for (std::size_t i = 0; i < layer.out; ++i) {
            double* wrow = layer.weights.data() + i * layer.in;
            for (std::size_t j = 0; j < layer.in; ++j) {
                wrow[j] = bound * (2.0 * unit(rng) - 1.0);
            }
            layer.bias[i] = bound * (2.0 * unit(rng) - 1.0);
        }
    }
    return p;
}

void max_norm_project(NetworkParams& params, double cap) {
    if (!(cap > 0.0)) throw std::invalid_argument("max_norm_project: cap must be positive");
    for (Layer& layer : params.layers) {
        for (std::size_t i = 0; i < layer.out; ++i) {
            double* wrow = layer.weights.data() + i * layer.in;
            double sq = 0.0;
            for (std::size_t j = 0; j < layer.in; ++j) sq += wrow[j] * wrow[j];
            const double norm = std::sqrt(sq);
            if (norm > cap) {
                const double s = cap / norm;
                for (std::size_t j = 0; j < layer.in; ++j) wrow[j] *= s;
            }
        }
    }
}

}  // namespace brnet
