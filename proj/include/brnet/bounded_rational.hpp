#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brnet/distribution.hpp"

namespace brnet {

/// Result of the alternating fixed-point solver. The objective trace holds
/// the rate distortion objective after each completed iteration and is
/// nondecreasing up to 1e-10 of floating point slack.
struct SolverReport {
    ConditionalPolicy policy;
    Distribution marginal;
    std::vector<double> objective_trace;
    std::size_t iterations;
    bool converged;
};

/// Free energy (1-beta)*<U>_p - beta*KL(p || prior) of a single strategy.
/// Terms with p(y) == 0 contribute nothing; p(y) > 0 where prior(y) == 0 is
/// an infinite divergence and is rejected.
double free_energy_value(const Distribution& p, const Distribution& prior,
                         std::span<const double> utility, TradeoffBeta beta);

/// Closed-form maximizer of the free energy: the prior tilted by
/// exp(((1-beta)/beta) * U) and renormalized. Exponentials are max-shifted,
/// so exponent magnitudes up to ~700 stay in range.
Distribution free_energy_solution(const Distribution& prior, std::span<const double> utility,
                                  TradeoffBeta beta);

/// I(x; y) in nats under context distribution px and conditional policy,
/// with the marginal induced by the pair. 0 * ln 0 counts as 0.
double mutual_information(const Distribution& px, const ConditionalPolicy& policy);

/// Rate distortion objective (1-beta)*<U>_{p(x,y)} - beta*I(x; y).
double rate_distortion_value(const Distribution& px, const ConditionalPolicy& policy,
                             const UtilityTable& utility, TradeoffBeta beta);

/// Alternating conditional/marginal fixed-point iteration (Blahut-Arimoto).
/// Stops when the objective changes by less than `tol` between iterations,
/// or after `max_iter` iterations. The initial marginal must be strictly
/// positive everywhere.
SolverReport blahut_arimoto(const Distribution& px, const UtilityTable& utility,
                            TradeoffBeta beta, const Distribution& init_marginal,
                            double tol = 1e-10, std::size_t max_iter = 10000);

}  // namespace brnet
