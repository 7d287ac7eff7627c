#pragma once

// Test-only oracles. Both routes here are deliberately independent of the
// library's truncated-series engine: counts come from exhaustive
// enumeration of exponent vectors, products from a hand-rolled convolution.

#include "conf2/rank_table.hpp"

#include <functional>
#include <span>
#include <vector>

namespace conf2::testing {

/// Counts monomials cell by cell by walking every exponent vector whose
/// (weight, reduced degree) stays inside the table.
inline BigradedRankTable brute_force_rank_table(std::span<const GeneratorSpec> generators,
                                                std::int64_t k_max, std::int64_t q_max) {
    BigradedRankTable table(k_max, q_max);
    table.rank(0, 0) = 0;  // recounted by the enumeration below

    std::function<void(std::size_t, std::int64_t, std::int64_t)> visit =
        [&](std::size_t idx, std::int64_t k_acc, std::int64_t q_acc) {
            if (idx == generators.size()) {
                ++table.rank(k_acc, q_acc);
                return;
            }
            const auto& g = generators[idx];
            for (std::int64_t e = 0;; ++e) {
                const std::int64_t k_next = k_acc + e * g.weight;
                const std::int64_t q_next = q_acc + e * g.reduced_degree;
                if (k_next > k_max || q_next > q_max) break;
                visit(idx + 1, k_next, q_next);
                if (g.exterior && e == 1) break;
                if (g.weight == 0 && g.reduced_degree == 0) break;
            }
        };
    visit(0, 0, 0);
    return table;
}

/// Plain double-loop convolution, truncated at q_max.
inline std::vector<Count> convolve(const std::vector<Count>& a, const std::vector<Count>& b,
                                   std::int64_t q_max) {
    std::vector<Count> out(static_cast<std::size_t>(q_max) + 1, Count(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (static_cast<std::int64_t>(i + j) <= q_max) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<Count> counts(std::initializer_list<long long> values) {
    std::vector<Count> out;
    for (const auto v : values) out.emplace_back(v);
    return out;
}

}  // namespace conf2::testing
