#pragma once

#include <stdexcept>

namespace brnet {

/// Exponential-window average m <- (1 - 1/tau) m + (1/tau) s with time
/// horizon tau >= 1. tau == 1 replaces the value with the sample.
class RunningMean {
public:
    RunningMean(double initial, double tau) : value_(initial), tau_(tau) {
        if (!(tau >= 1.0)) throw std::invalid_argument("RunningMean: tau must be >= 1");
    }

    void update(double sample) { value_ = (1.0 - 1.0 / tau_) * value_ + sample / tau_; }

    double value() const { return value_; }
    double tau() const { return tau_; }

private:
    double value_;
    double tau_;
};

inline RunningMean running_mean_update(RunningMean m, double sample) {
    m.update(sample);
    return m;
}

}  // namespace brnet
