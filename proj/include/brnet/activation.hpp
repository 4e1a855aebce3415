#pragma once

#include <cmath>
#include <functional>

namespace brnet {

/// Monotone scalar activation with its first derivative. Sigmoid serves as a
/// firing probability in (0, 1); rectified-linear as a nonnegative firing
/// rate (derivative at the kink is taken as 0).
struct Activation {
    enum class Kind { Sigmoid, RectifiedLinear, Custom };

    Kind kind;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;

    static Activation sigmoid() {
        auto f = [](double a) { return 1.0 / (1.0 + std::exp(-a)); };
        return Activation{Kind::Sigmoid, f, [f](double a) {
                              const double s = f(a);
                              return s * (1.0 - s);
                          }};
    }

    static Activation rectified_linear() {
        return Activation{Kind::RectifiedLinear, [](double a) { return a > 0.0 ? a : 0.0; },
                          [](double a) { return a > 0.0 ? 1.0 : 0.0; }};
    }

    static Activation custom(std::function<double(double)> eval,
                             std::function<double(double)> deriv) {
        return Activation{Kind::Custom, std::move(eval), std::move(deriv)};
    }
};

}  // namespace brnet
