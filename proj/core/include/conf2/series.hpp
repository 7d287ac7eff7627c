#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace conf2 {

/// Exact integer type for ranks and series coefficients.
using Count = boost::multiprecision::cpp_int;

/// Coefficients of a one-variable Poincare series truncated at q_max;
/// always stores exactly q_max + 1 entries.
class PoincareSeries {
public:
    /// The zero series truncated at degree 0.
    PoincareSeries() = default;

    explicit PoincareSeries(std::vector<Count> coefficients);

    static PoincareSeries zero(std::int64_t q_max);

    std::int64_t q_max() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }

    const Count& coefficient(std::int64_t q) const;
    Count coefficient_or_zero(std::int64_t q) const;
    const std::vector<Count>& coefficients() const { return coefficients_; }

    /// Same series with trailing zero coefficients dropped; keeps at least
    /// the degree-0 entry.
    PoincareSeries trimmed() const;

    bool operator==(const PoincareSeries&) const = default;

private:
    std::vector<Count> coefficients_{Count(0)};
};

/// Coefficient-wise convolution of a and b truncated at q_max.
PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b,
                              std::int64_t q_max);

}  // namespace conf2
