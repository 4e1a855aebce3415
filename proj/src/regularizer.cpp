#include "brnet/regularizer.hpp"

#include <cmath>
#include <stdexcept>

namespace brnet {

namespace {
double clamped_log(double v, double eps) { return std::log(v > eps ? v : eps); }
}

std::string to_string(RegMode mode) {
    switch (mode) {
        case RegMode::Umax: return "umax";
        case RegMode::Lrdi: return "lrdi";
        case RegMode::Grdi: return "grdi";
    }
    throw std::logic_error("to_string(RegMode): unreachable");
}

RegMode reg_mode_from_string(const std::string& name) {
    if (name == "umax") return RegMode::Umax;
    if (name == "lrdi") return RegMode::Lrdi;
    if (name == "grdi") return RegMode::Grdi;
    throw std::invalid_argument("unknown regularizer mode: " + name);
}

void RegularizerConfig::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("RegularizerConfig: epsilon must be > 0");
    if (!(tau >= 1.0)) throw std::invalid_argument("RegularizerConfig: tau must be >= 1");
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw std::invalid_argument("RegularizerConfig: beta must lie in [0, 1)");
    }
    if (mode == RegMode::Umax && beta != 0.0) {
        throw std::invalid_argument("RegularizerConfig: umax mode carries no beta");
    }
}

MeanBank::MeanBank(const std::vector<std::size_t>& arch, double tau) : tau_(tau) {
    if (arch.size() < 2) throw std::invalid_argument("MeanBank: need at least two layers");
    if (!(tau >= 1.0)) throw std::invalid_argument("MeanBank: tau must be >= 1");
    for (std::size_t l = 1; l + 1 < arch.size(); ++l) {
        hidden_.emplace_back(arch[l], 0.0);
    }
    output_.assign(arch.back(), 0.0);
}

void MeanBank::observe(const ForwardTrace& trace) {
    const std::size_t L = trace.pre.size();
    if (L != hidden_.size() + 1 || trace.output().size() != output_.size()) {
        throw std::invalid_argument("MeanBank: trace shape does not match bank");
    }
    if (!warmed_) {
        for (std::size_t l = 0; l < hidden_.size(); ++l) hidden_[l] = trace.rates[l + 1];
        output_ = trace.output();
        warmed_ = true;
        return;
    }
    const double keep = 1.0 - 1.0 / tau_;
    const double take = 1.0 / tau_;
    for (std::size_t l = 0; l < hidden_.size(); ++l) {
        const std::vector<double>& r = trace.rates[l + 1];
        for (std::size_t i = 0; i < hidden_[l].size(); ++i) {
            hidden_[l][i] = keep * hidden_[l][i] + take * r[i];
        }
    }
    const std::vector<double>& f = trace.output();
    for (std::size_t j = 0; j < output_.size(); ++j) {
        output_[j] = keep * output_[j] + take * f[j];
    }
}

void MeanBank::set_state(std::vector<std::vector<double>> hidden, std::vector<double> output,
                         bool warmed) {
    if (hidden.size() != hidden_.size() || output.size() != output_.size()) {
        throw std::invalid_argument("MeanBank::set_state: shape mismatch");
    }
    for (std::size_t l = 0; l < hidden.size(); ++l) {
        if (hidden[l].size() != hidden_[l].size()) {
            throw std::invalid_argument("MeanBank::set_state: shape mismatch");
        }
    }
    hidden_ = std::move(hidden);
    output_ = std::move(output);
    warmed_ = warmed;
}

double utility_cross_entropy(const ForwardTrace& trace, std::size_t label, double eps) {
    const std::vector<double>& f = trace.output();
    if (label >= f.size()) throw std::invalid_argument("utility_cross_entropy: label out of range");
    if (!(eps > 0.0)) throw std::invalid_argument("utility_cross_entropy: eps must be > 0");
    return clamped_log(f[label], eps);
}

std::vector<double> utility_output_delta(const ForwardTrace& trace, std::size_t label,
                                         double eps) {
    const std::vector<double>& f = trace.output();
    if (label >= f.size()) throw std::invalid_argument("utility_output_delta: label out of range");
    std::vector<double> d(f.size(), 0.0);
    d[label] = 1.0 / (f[label] > eps ? f[label] : eps);
    return d;
}

std::vector<double> grdi_output_delta(const ForwardTrace& trace, std::size_t label, double beta,
                                      const MeanBank& means, double eps) {
    if (!means.warmed()) throw std::logic_error("grdi_output_delta: mean bank not warmed up");
    const std::vector<double>& f = trace.output();
    std::vector<double> d = utility_output_delta(trace, label, eps);
    for (std::size_t j = 0; j < f.size(); ++j) {
        d[j] = (1.0 - beta) * d[j] -
               beta * (clamped_log(f[j], eps) - clamped_log(means.output_mean(j), eps));
    }
    return d;
}

Gradients lrdi_gradient(const NetworkParams& params, const ForwardTrace& trace,
                        std::size_t label, double beta, const MeanBank& means, double eps) {
    if (!means.warmed()) throw std::logic_error("lrdi_gradient: mean bank not warmed up");
    Gradients grad = backprop(params, trace, utility_output_delta(trace, label, eps));
    if (beta == 0.0) return grad;  // degenerate path: bit-identical to umax
    const double scale = 1.0 - beta;
    for (Layer& g : grad.layers) {
        for (double& w : g.weights) w *= scale;
        for (double& b : g.bias) b *= scale;
    }
    // Local information terms on hidden neurons; bias acts as a weight with
    // constant input 1.
    for (std::size_t l = 0; l + 1 < params.layers.size(); ++l) {
        const Layer& layer = params.layers[l];
        Layer& g = grad.layers[l];
        const std::vector<double>& xi = trace.layer_input(l);
        const std::vector<double>& pre = trace.pre[l];
        const std::vector<double>& phi = trace.rates[l + 1];
        for (std::size_t i = 0; i < layer.out; ++i) {
            if (pre[i] <= 0.0) continue;  // phi' = 0 on the inactive branch
            const double term =
                -beta * (clamped_log(phi[i], eps) - clamped_log(means.hidden_mean(l, i), eps));
            double* grow = g.weights.data() + i * layer.in;
            for (std::size_t j = 0; j < layer.in; ++j) grow[j] += term * xi[j];
            g.bias[i] += term;
        }
    }
    return grad;
}

double global_mi_estimate(const std::vector<ForwardTrace>& traces, const MeanBank& means,
                          double eps) {
    if (traces.empty()) throw std::invalid_argument("global_mi_estimate: empty batch");
    double acc = 0.0;
    for (const ForwardTrace& t : traces) {
        const std::vector<double>& f = t.output();
        for (std::size_t j = 0; j < f.size(); ++j) {
            acc += f[j] * (clamped_log(f[j], eps) - clamped_log(means.output_mean(j), eps));
        }
    }
    return acc / static_cast<double>(traces.size());
}

double output_entropy(const std::vector<double>& f, double eps) {
    double h = 0.0;
    for (double v : f) h -= v * clamped_log(v, eps);
    return h;
}

}  // namespace brnet
