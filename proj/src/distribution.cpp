#include "brnet/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace brnet {

namespace {
constexpr double kSumTolerance = 1e-12;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("Distribution: empty mass vector");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("Distribution: negative or NaN entry");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("Distribution: entries do not sum to 1");
    }
}

Distribution Distribution::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Distribution::uniform: n == 0");
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::delta(std::size_t n, std::size_t index) {
    if (index >= n) throw std::invalid_argument("Distribution::delta: index out of range");
    std::vector<double> p(n, 0.0);
    p[index] = 1.0;
    return Distribution(std::move(p));
}

double Distribution::total_variation(const Distribution& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Distribution::total_variation: size mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        worst = std::max(worst, std::abs(probs_[i] - other.probs_[i]));
    }
    return worst;
}

ConditionalPolicy::ConditionalPolicy(std::vector<Distribution> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw std::invalid_argument("ConditionalPolicy: no rows");
    }
    const std::size_t len = rows_.front().size();
    for (const Distribution& r : rows_) {
        if (r.size() != len) {
            throw std::invalid_argument("ConditionalPolicy: ragged rows");
        }
    }
}

UtilityTable::UtilityTable(std::size_t contexts, std::size_t actions, std::vector<double> values)
    : contexts_(contexts), actions_(actions), values_(std::move(values)) {
    if (contexts_ == 0 || actions_ == 0) {
        throw std::invalid_argument("UtilityTable: empty dimension");
    }
    if (values_.size() != contexts_ * actions_) {
        throw std::invalid_argument("UtilityTable: value count does not match dimensions");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("UtilityTable: non-finite entry");
        }
    }
}

UtilityTable UtilityTable::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("UtilityTable::from_rows: empty matrix");
    }
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) {
            throw std::invalid_argument("UtilityTable::from_rows: ragged rows");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return UtilityTable(rows.size(), rows.front().size(), std::move(flat));
}

TradeoffBeta::TradeoffBeta(double beta) : beta_(beta) {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw std::invalid_argument("TradeoffBeta: beta must lie strictly inside (0, 1)");
    }
}

}  // namespace brnet
