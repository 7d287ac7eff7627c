#pragma once

#include "conf2/loopspace.hpp"
#include "conf2/series.hpp"

#include <span>

namespace conf2 {

/**
 * Dense table of monomial counts indexed by (weight k, reduced degree q)
 * over 0 <= k <= k_max, 0 <= q <= q_max. A freshly constructed table counts
 * the empty monomial only: rank(0, 0) = 1 and every other cell is 0.
 */
class BigradedRankTable {
public:
    BigradedRankTable(std::int64_t k_max, std::int64_t q_max);

    std::int64_t k_max() const { return k_max_; }
    std::int64_t q_max() const { return q_max_; }

    const Count& rank(std::int64_t k, std::int64_t q) const;
    Count& rank(std::int64_t k, std::int64_t q);

private:
    std::size_t index(std::int64_t k, std::int64_t q) const;

    std::int64_t k_max_ = 0;
    std::int64_t q_max_ = 0;
    std::vector<Count> cells_;
};

/**
 * Counts the monomials of the free graded-commutative algebra on the given
 * generators, cell (k, q) holding the number of monomials of total weight k
 * and total reduced degree q. Exterior generators appear with exponent at
 * most 1, polynomial generators with any exponent. Computed by folding one
 * truncated series factor per generator into the table.
 *
 * Generators must be duplicate-free by id, and no generator may have
 * reduced degree 0 together with weight 0 (the count would be infinite).
 */
BigradedRankTable rank_table(std::span<const GeneratorSpec> generators,
                             std::int64_t k_max, std::int64_t q_max);

/// Row k of the table, as a series in the reduced degree q.
PoincareSeries table_slice(const BigradedRankTable& table, std::int64_t k);

/**
 * Counts the same monomials as rank_table but grades each generator by
 * reduced_degree + n * weight, the degree seen by a dimension-n label
 * sphere. Computed by direct enumeration of exponent vectors, deliberately
 * independent of the series engine, so the two routes cross-check the
 * grading shift.
 */
Count full_degree_rank(std::span<const GeneratorSpec> generators, std::int64_t n,
                       std::int64_t total_degree, std::int64_t weight);

}  // namespace conf2
