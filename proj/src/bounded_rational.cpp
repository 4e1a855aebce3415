#include "brnet/bounded_rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace brnet {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

/// <U>_{p(x,y)} with the empirical joint px(x) * policy(y|x).
double expected_utility(const Distribution& px, const ConditionalPolicy& policy,
                        const UtilityTable& utility) {
    double acc = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
        if (px[x] == 0.0) continue;
        const Distribution& row = policy.row(x);
        double inner = 0.0;
        for (std::size_t y = 0; y < row.size(); ++y) {
            inner += row[y] * utility.at(x, y);
        }
        acc += px[x] * inner;
    }
    return acc;
}

}  // namespace

double free_energy_value(const Distribution& p, const Distribution& prior,
                         std::span<const double> utility, TradeoffBeta beta) {
    require_same_size(p.size(), prior.size(), "free_energy_value");
    require_same_size(p.size(), utility.size(), "free_energy_value");
    double eu = 0.0;
    double kl = 0.0;
    for (std::size_t y = 0; y < p.size(); ++y) {
        if (p[y] == 0.0) continue;
        if (prior[y] == 0.0) {
            throw std::domain_error(
                "free_energy_value: p assigns mass where the prior is zero (infinite divergence)");
        }
        eu += p[y] * utility[y];
        kl += p[y] * std::log(p[y] / prior[y]);
    }
    const double b = beta.value();
    return (1.0 - b) * eu - b * kl;
}

Distribution free_energy_solution(const Distribution& prior, std::span<const double> utility,
                                  TradeoffBeta beta) {
    require_same_size(prior.size(), utility.size(), "free_energy_solution");
    const double scale = beta.exponent_scale();
    // Shift by the max exponent over the prior's support before exponentiating.
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < prior.size(); ++y) {
        if (prior[y] > 0.0) shift = std::max(shift, scale * utility[y]);
    }
    std::vector<double> out(prior.size(), 0.0);
    double norm = 0.0;
    for (std::size_t y = 0; y < prior.size(); ++y) {
        if (prior[y] == 0.0) continue;
        out[y] = prior[y] * std::exp(scale * utility[y] - shift);
        norm += out[y];
    }
    for (double& v : out) v /= norm;
    return Distribution(std::move(out));
}

double mutual_information(const Distribution& px, const ConditionalPolicy& policy) {
    require_same_size(px.size(), policy.contexts(), "mutual_information");
    const std::size_t ny = policy.actions();
    std::vector<double> marginal(ny, 0.0);
    for (std::size_t x = 0; x < px.size(); ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
            marginal[y] += px[x] * policy.row(x)[y];
        }
    }
    double info = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
        if (px[x] == 0.0) continue;
        const Distribution& row = policy.row(x);
        for (std::size_t y = 0; y < ny; ++y) {
            if (row[y] == 0.0) continue;
            info += px[x] * row[y] * std::log(row[y] / marginal[y]);
        }
    }
    return info;
}

double rate_distortion_value(const Distribution& px, const ConditionalPolicy& policy,
                             const UtilityTable& utility, TradeoffBeta beta) {
    require_same_size(px.size(), policy.contexts(), "rate_distortion_value");
    require_same_size(policy.actions(), utility.actions(), "rate_distortion_value");
    require_same_size(px.size(), utility.contexts(), "rate_distortion_value");
    const double b = beta.value();
    return (1.0 - b) * expected_utility(px, policy, utility) -
           b * mutual_information(px, policy);
}

SolverReport blahut_arimoto(const Distribution& px, const UtilityTable& utility,
                            TradeoffBeta beta, const Distribution& init_marginal,
                            double tol, std::size_t max_iter) {
    const std::size_t nx = utility.contexts();
    const std::size_t ny = utility.actions();
    require_same_size(px.size(), nx, "blahut_arimoto");
    require_same_size(init_marginal.size(), ny, "blahut_arimoto");
    if (!(tol > 0.0)) throw std::invalid_argument("blahut_arimoto: tol must be positive");
    if (max_iter == 0) throw std::invalid_argument("blahut_arimoto: max_iter must be positive");
    for (std::size_t y = 0; y < ny; ++y) {
        if (init_marginal[y] <= 0.0) {
            throw std::invalid_argument("blahut_arimoto: init marginal must be strictly positive");
        }
    }

    // Tilts exp(scale * (U - rowmax)) are constant across iterations.
    const double scale = beta.exponent_scale();
    std::vector<double> tilt(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
        double rowmax = utility.at(x, 0);
        for (std::size_t y = 1; y < ny; ++y) rowmax = std::max(rowmax, utility.at(x, y));
        for (std::size_t y = 0; y < ny; ++y) {
            tilt[x * ny + y] = std::exp(scale * (utility.at(x, y) - rowmax));
        }
    }

    std::vector<double> cond(nx * ny, 0.0);
    std::vector<double> q = init_marginal.probs();
    std::vector<double> trace;
    double prev = 0.0;
    bool have_prev = false;
    bool converged = false;
    std::size_t it = 0;

    while (it < max_iter) {
        // Conditional update: p(y|x) proportional to q(y) * tilt(x, y).
        for (std::size_t x = 0; x < nx; ++x) {
            double z = 0.0;
            for (std::size_t y = 0; y < ny; ++y) {
                const double v = q[y] * tilt[x * ny + y];
                cond[x * ny + y] = v;
                z += v;
            }
            for (std::size_t y = 0; y < ny; ++y) cond[x * ny + y] /= z;
        }
        // Marginal update: q(y) = sum_x p(y|x) px(x).
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t x = 0; x < nx; ++x) {
            for (std::size_t y = 0; y < ny; ++y) {
                q[y] += px[x] * cond[x * ny + y];
            }
        }
        // Objective after this iteration.
        double eu = 0.0;
        double info = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            if (px[x] == 0.0) continue;
            for (std::size_t y = 0; y < ny; ++y) {
                const double p = cond[x * ny + y];
                if (p == 0.0) continue;
                eu += px[x] * p * utility.at(x, y);
                info += px[x] * p * std::log(p / q[y]);
            }
        }
        const double objective = (1.0 - beta.value()) * eu - beta.value() * info;
        trace.push_back(objective);
        ++it;
        if (have_prev && std::abs(objective - prev) < tol) {
            converged = true;
            break;
        }
        prev = objective;
        have_prev = true;
    }

    std::vector<Distribution> rows;
    rows.reserve(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        rows.emplace_back(
            std::vector<double>(cond.begin() + x * ny, cond.begin() + (x + 1) * ny));
    }
    return SolverReport{ConditionalPolicy(std::move(rows)), Distribution(std::move(q)),
                        std::move(trace), it, converged};
}

}  // namespace brnet
