#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace brnet {

/// Discrete probability mass function over a finite outcome set.
/// Validated on construction: nonempty, entries >= 0, sum within 1e-12 of 1.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    static Distribution uniform(std::size_t n);
    /// Point mass on `index` over `n` outcomes.
    static Distribution delta(std::size_t n, std::size_t index);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

    /// Max-abs difference; distributions must have equal size.
    double total_variation(const Distribution& other) const;

private:
    std::vector<double> probs_;
};

/// One conditional distribution p(y|x) per context x, as a stochastic matrix.
class ConditionalPolicy {
public:
    explicit ConditionalPolicy(std::vector<Distribution> rows);

    std::size_t contexts() const { return rows_.size(); }
    std::size_t actions() const { return rows_.front().size(); }
    const Distribution& row(std::size_t x) const { return rows_[x]; }
    const std::vector<Distribution>& rows() const { return rows_; }

private:
    std::vector<Distribution> rows_;
};

/// Dense utility matrix U(x, y); all entries finite.
class UtilityTable {
public:
    UtilityTable(std::size_t contexts, std::size_t actions, std::vector<double> values);
    static UtilityTable from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t contexts() const { return contexts_; }
    std::size_t actions() const { return actions_; }
    double at(std::size_t x, std::size_t y) const { return values_[x * actions_ + y]; }
    std::span<const double> row(std::size_t x) const {
        return std::span<const double>(values_).subspan(x * actions_, actions_);
    }

private:
    std::size_t contexts_;
    std::size_t actions_;
    std::vector<double> values_;
};

/// Utility/information trade-off in the open interval (0, 1). Small values
/// buy precision, values near 1 collapse the strategy onto its prior.
class TradeoffBeta {
public:
    explicit TradeoffBeta(double beta);

    double value() const { return beta_; }
    /// Exponent scale (1 - beta) / beta used by the tilted-prior solutions.
    double exponent_scale() const { return (1.0 - beta_) / beta_; }

private:
    double beta_;
};

}  // namespace brnet
