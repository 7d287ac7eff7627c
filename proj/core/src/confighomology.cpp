#include "conf2/confighomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace conf2 {

namespace {

ManifoldData surface(std::int64_t beta1, std::string name) {
    return ManifoldData{2, {1, beta1, 1}, std::move(name)};
}

/**
 * Internal truncation for the reduced degree of a weight-k monomial. A
 * polynomial generator has reduced degree < weight * (m - 1) + weight, and
 * each of the at-most-min(beta_m, k) exterior factors contributes exactly m,
 * so k(m - 1) + min(beta_m, k) clears the last nonzero rank. The max with
 * 2k + m keeps the historical bound used for surfaces.
 */
std::int64_t config_q_cap(const ManifoldData& manifold, std::int64_t k) {
    const std::int64_t top_betti = manifold.mod2_betti.back();
    const std::int64_t polynomial_cap =
        k * std::max<std::int64_t>(manifold.dimension - 1, 0) + std::min(top_betti, k);
    return std::max(2 * k + manifold.dimension, polynomial_cap);
}

std::vector<PoincareSeries> braid_series_up_to(std::int64_t k_max) {
    std::vector<PoincareSeries> series;
    series.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) series.push_back(braid_betti(k));
    return series;
}

Count decomposition_rank(const std::vector<PoincareSeries>& braid, std::int64_t k,
                         std::int64_t q) {
    Count total = 0;
    for (std::int64_t l = 0; l <= std::min(q, k); ++l)
        total += braid[static_cast<std::size_t>(k - l)].coefficient_or_zero(q - l);
    if (q >= 2)
        for (std::int64_t l = 0; l <= std::min(q - 2, k - 1); ++l)
            total += braid[static_cast<std::size_t>(k - l - 1)].coefficient_or_zero(q - l - 2);
    return total;
}

}  // namespace

void validate_manifold(const ManifoldData& manifold) {
    if (manifold.dimension < 1)
        throw std::invalid_argument("manifold '" + manifold.name + "': dimension must be >= 1");
    if (static_cast<std::int64_t>(manifold.mod2_betti.size()) != manifold.dimension + 1)
        throw std::invalid_argument("manifold '" + manifold.name +
                                    "': needs one Betti number per degree 0..dimension");
    if (manifold.mod2_betti.front() != 1)
        throw std::invalid_argument("manifold '" + manifold.name +
                                    "': beta_0 must be 1 (connected)");
    for (const auto beta : manifold.mod2_betti)
        if (beta < 0)
            throw std::invalid_argument("manifold '" + manifold.name +
                                        "': Betti numbers must be >= 0");
}

ManifoldData orientable_surface(std::int64_t genus) {
    if (genus < 0) throw std::invalid_argument("orientable_surface: genus must be >= 0");
    return surface(2 * genus, "orientable:" + std::to_string(genus));
}

ManifoldData nonorientable_surface(std::int64_t genus) {
    if (genus < 1) throw std::invalid_argument("nonorientable_surface: genus must be >= 1");
    return surface(genus, "nonorientable:" + std::to_string(genus));
}

ManifoldData sphere() { return surface(0, "sphere"); }
ManifoldData torus() { return surface(2, "torus"); }
ManifoldData projective_plane() { return surface(1, "rp2"); }
ManifoldData klein_bottle() { return surface(2, "klein"); }

std::vector<ManifoldData> builtin_surfaces() {
    return {sphere(),       projective_plane(),      torus(),
            klein_bottle(), nonorientable_surface(3), orientable_surface(2)};
}

std::vector<GeneratorSpec> bct_generators(const ManifoldData& manifold,
                                          std::int64_t weight_cap) {
    validate_manifold(manifold);
    if (weight_cap < 1)
        throw std::invalid_argument("bct_generators: weight_cap must be >= 1");

    const std::int64_t m = manifold.dimension;
    std::vector<GeneratorSpec> generators;
    for (std::int64_t q = 0; q <= m; ++q) {
        const std::int64_t copies = manifold.mod2_betti[static_cast<std::size_t>(q)];
        for (std::int64_t copy = 0; copy < copies; ++copy) {
            auto block = loop_space_generators(m - q, q, m, weight_cap);
            for (auto& g : block) {
                g.id = make_generator_id(q, copy, g.word);
                generators.push_back(std::move(g));
            }
        }
    }
    return generators;
}

PoincareSeries config_betti(const ManifoldData& manifold, std::int64_t k) {
    validate_manifold(manifold);
    if (k < 0) throw std::invalid_argument("config_betti: k must be >= 0");
    const auto generators = bct_generators(manifold, std::max<std::int64_t>(k, 1));
    const auto table = rank_table(generators, k, config_q_cap(manifold, k));
    return table_slice(table, k).trimmed();
}

PoincareSeries braid_betti(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("braid_betti: k must be >= 0");
    // plane configurations: only the handle-degree-0 double-loop generators
    const auto generators = loop_space_generators(2, 0, 2, std::max<std::int64_t>(k, 1));
    const auto table = rank_table(generators, k, std::max<std::int64_t>(k - 1, 0));
    return table_slice(table, k).trimmed();
}

Count rp2_betti_via_braids(std::int64_t k, std::int64_t q) {
    if (k < 1) throw std::invalid_argument("rp2_betti_via_braids: k must be >= 1");
    if (q < 0) throw std::invalid_argument("rp2_betti_via_braids: q must be >= 0");
    return decomposition_rank(braid_series_up_to(k), k, q);
}

VerificationReport verify_braid_decomposition(std::int64_t k_max) {
    if (k_max < 1)
        throw std::invalid_argument("verify_braid_decomposition: k_max must be >= 1");
    VerificationReport report{"braid-decomposition", {}};
    const auto braid = braid_series_up_to(k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const auto direct = config_betti(projective_plane(), k);
        for (std::int64_t q = 0; q <= k + 2; ++q)
            add_check(report, "k=" + std::to_string(k) + " q=" + std::to_string(q),
                      decomposition_rank(braid, k, q), direct.coefficient_or_zero(q));
    }
    return report;
}

VerificationReport verify_n_independence(const ManifoldData& manifold, std::int64_t k,
                                         const std::vector<std::int64_t>& n_values) {
    validate_manifold(manifold);
    if (k < 0) throw std::invalid_argument("verify_n_independence: k must be >= 0");
    if (n_values.empty())
        throw std::invalid_argument("verify_n_independence: need at least one n");
    for (const auto n : n_values)
        if (n < 1) throw std::invalid_argument("verify_n_independence: every n must be >= 1");

    VerificationReport report{"n-independence", {}};
    const auto direct = config_betti(manifold, k);
    const auto generators = bct_generators(manifold, std::max<std::int64_t>(k, 1));
    const std::int64_t q_cap = config_q_cap(manifold, k);
    for (const auto n : n_values) {
        for (std::int64_t q = 0; q <= q_cap; ++q) {
            add_check(report,
                      manifold.name + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                          " q=" + std::to_string(q),
                      direct.coefficient_or_zero(q),
                      full_degree_rank(generators, n, q + k * n, k));
        }
    }
    return report;
}

}  // namespace conf2
