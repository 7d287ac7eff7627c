#include "conf2/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace conf2 {

PoincareSeries::PoincareSeries(std::vector<Count> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw std::invalid_argument("PoincareSeries: needs at least the degree-0 coefficient");
}

PoincareSeries PoincareSeries::zero(std::int64_t q_max) {
    if (q_max < 0) throw std::invalid_argument("PoincareSeries::zero: q_max must be >= 0");
    return PoincareSeries(std::vector<Count>(static_cast<std::size_t>(q_max) + 1, Count(0)));
}

const Count& PoincareSeries::coefficient(std::int64_t q) const {
    if (q < 0 || q > q_max())
        throw std::out_of_range("PoincareSeries::coefficient: degree out of range");
    return coefficients_[static_cast<std::size_t>(q)];
}

Count PoincareSeries::coefficient_or_zero(std::int64_t q) const {
    if (q < 0 || q > q_max()) return Count(0);
    return coefficients_[static_cast<std::size_t>(q)];
}

PoincareSeries PoincareSeries::trimmed() const {
    auto coefficients = coefficients_;
    while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
    return PoincareSeries(std::move(coefficients));
}

PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b,
                              std::int64_t q_max) {
    if (q_max < 0) throw std::invalid_argument("series_product: q_max must be >= 0");
    std::vector<Count> out(static_cast<std::size_t>(q_max) + 1, Count(0));
    const std::int64_t a_top = std::min(a.q_max(), q_max);
    for (std::int64_t i = 0; i <= a_top; ++i) {
        const Count& ai = a.coefficient(i);
        if (ai == 0) continue;
        const std::int64_t b_top = std::min(b.q_max(), q_max - i);
        for (std::int64_t j = 0; j <= b_top; ++j)
            out[static_cast<std::size_t>(i + j)] += ai * b.coefficient(j);
    }
    return PoincareSeries(std::move(out));
}

}  // namespace conf2
