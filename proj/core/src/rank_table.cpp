#include "conf2/rank_table.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace conf2 {

namespace {

void validate_gradings(std::span<const GeneratorSpec> generators) {
    for (const auto& g : generators) {
        if (g.reduced_degree < 0 || g.weight < 0)
            throw std::invalid_argument("generator '" + g.id + "' has a negative grading");
        if (g.reduced_degree == 0 && g.weight == 0)
            throw std::invalid_argument("generator '" + g.id +
                                        "' has reduced degree 0 and weight 0; its powers "
                                        "would make every count infinite");
    }
}

void require_unique_ids(std::span<const GeneratorSpec> generators) {
    std::unordered_set<std::string> seen;
    for (const auto& g : generators)
        if (!seen.insert(g.id).second)
            throw std::invalid_argument("duplicate generator id '" + g.id + "'");
}

}  // namespace

BigradedRankTable::BigradedRankTable(std::int64_t k_max, std::int64_t q_max)
    : k_max_(k_max), q_max_(q_max) {
    if (k_max < 0 || q_max < 0)
        throw std::invalid_argument("BigradedRankTable: k_max and q_max must be >= 0");
    cells_.assign(static_cast<std::size_t>((k_max + 1) * (q_max + 1)), Count(0));
    cells_[0] = 1;  // the empty monomial
}

std::size_t BigradedRankTable::index(std::int64_t k, std::int64_t q) const {
    if (k < 0 || k > k_max_ || q < 0 || q > q_max_)
        throw std::out_of_range("BigradedRankTable: cell out of range");
    return static_cast<std::size_t>(k * (q_max_ + 1) + q);
}

const Count& BigradedRankTable::rank(std::int64_t k, std::int64_t q) const {
    return cells_[index(k, q)];
}

Count& BigradedRankTable::rank(std::int64_t k, std::int64_t q) { return cells_[index(k, q)]; }

BigradedRankTable rank_table(std::span<const GeneratorSpec> generators, std::int64_t k_max,
                             std::int64_t q_max) {
    validate_gradings(generators);
    require_unique_ids(generators);

    BigradedRankTable table(k_max, q_max);
    for (const auto& g : generators) {
        const std::int64_t w = g.weight;
        const std::int64_t d = g.reduced_degree;
        if (w > k_max || d > q_max) continue;  // cannot appear inside the truncation
        if (g.exterior) {
            // multiply by (1 + t^d s^w): descend so each cell is used once
            for (std::int64_t k = k_max; k >= w; --k)
                for (std::int64_t q = q_max; q >= d; --q)
                    table.rank(k, q) += table.rank(k - w, q - d);
        } else {
            // multiply by the truncated geometric series in t^d s^w
            for (std::int64_t k = w; k <= k_max; ++k)
                for (std::int64_t q = d; q <= q_max; ++q)
                    table.rank(k, q) += table.rank(k - w, q - d);
        }
    }
    return table;
}

PoincareSeries table_slice(const BigradedRankTable& table, std::int64_t k) {
    if (k < 0 || k > table.k_max())
        throw std::out_of_range("table_slice: weight out of range");
    std::vector<Count> row;
    row.reserve(static_cast<std::size_t>(table.q_max()) + 1);
    for (std::int64_t q = 0; q <= table.q_max(); ++q) row.push_back(table.rank(k, q));
    return PoincareSeries(std::move(row));
}

Count full_degree_rank(std::span<const GeneratorSpec> generators, std::int64_t n,
                       std::int64_t total_degree, std::int64_t weight) {
    if (n < 1) throw std::invalid_argument("full_degree_rank: n must be >= 1");
    validate_gradings(generators);
    if (total_degree < 0 || weight < 0) return 0;

    // exponent-vector recursion; n >= 1 makes every full degree positive
    // unless the weight is 0 too, which validate_gradings excluded
    const auto count = [&](const auto& self, std::size_t idx, std::int64_t degree_left,
                           std::int64_t weight_left) -> Count {
        if (idx == generators.size())
            return degree_left == 0 && weight_left == 0 ? Count(1) : Count(0);
        const auto& g = generators[idx];
        const std::int64_t d = g.reduced_degree + n * g.weight;
        std::int64_t e_max = g.exterior ? 1 : std::numeric_limits<std::int64_t>::max();
        if (d > 0) e_max = std::min(e_max, degree_left / d);
        if (g.weight > 0) e_max = std::min(e_max, weight_left / g.weight);
        Count total = 0;
        for (std::int64_t e = 0; e <= e_max; ++e)
            total += self(self, idx + 1, degree_left - e * d, weight_left - e * g.weight);
        return total;
    };
    return count(count, 0, total_degree, weight);
}

}  // namespace conf2
