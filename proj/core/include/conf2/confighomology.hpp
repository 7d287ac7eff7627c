#pragma once

#include "conf2/rank_table.hpp"
#include "conf2/report.hpp"

namespace conf2 {

/**
 * The only topological input the counting machinery needs: the dimension
 * and the mod-2 Betti numbers beta_0..beta_m of a closed connected
 * manifold. beta_0 must be 1.
 */
struct ManifoldData {
    std::int64_t dimension = 0;
    std::vector<std::int64_t> mod2_betti;
    std::string name;
};

void validate_manifold(const ManifoldData& manifold);

ManifoldData orientable_surface(std::int64_t genus);     // (1, 2g, 1), g >= 0
ManifoldData nonorientable_surface(std::int64_t genus);  // (1, g, 1), g >= 1
ManifoldData sphere();
ManifoldData torus();
ManifoldData projective_plane();
ManifoldData klein_bottle();

/// The surfaces exercised by the built-in verification suites.
std::vector<ManifoldData> builtin_surfaces();

/**
 * The generator set of the labelled-configuration-space algebra of the
 * manifold: beta_q copies of loop_space_generators(m - q, q, m, weight_cap)
 * for each q = 0..m, relabelled so ids stay unique across copies. For a
 * closed surface this realizes the polynomial algebra on the weight-2^j
 * tower, one degree-1 polynomial class per unit of beta_1, and one exterior
 * top class per unit of beta_2.
 */
std::vector<GeneratorSpec> bct_generators(const ManifoldData& manifold,
                                          std::int64_t weight_cap);

/**
 * Mod-2 Betti numbers of the space of k unordered points of the manifold,
 * computed as the weight-k monomial counts on bct_generators, graded by
 * reduced degree. Trailing zero ranks are trimmed; the internal truncation
 * provably clears the last nonzero rank.
 */
PoincareSeries config_betti(const ManifoldData& manifold, std::int64_t k);

/**
 * Mod-2 Betti numbers of the braid group on k strands: the weight-k slice
 * of the polynomial algebra on the weight-doubling generator tower alone
 * (reduced degree 2^j - 1, weight 2^j), which is the plane-configuration
 * case via the double-loop-space model. k = 0 and k = 1 give [1].
 */
PoincareSeries braid_betti(std::int64_t k);

/**
 * The rank of H_q for k unordered points of the projective plane assembled
 * from classical braid group homology:
 *
 *   sum_{l=0}^{min(q,k)}   rank H_{q-l}(B_{k-l})
 * + sum_{l=0}^{min(q-2,k-1)} rank H_{q-l-2}(B_{k-l-1})
 *
 * with B_0 the trivial group and the second sum empty when q < 2.
 */
Count rp2_betti_via_braids(std::int64_t k, std::int64_t q);

/// Checks rp2_betti_via_braids against config_betti on the projective
/// plane for all 1 <= k <= k_max, 0 <= q <= k + 2.
VerificationReport verify_braid_decomposition(std::int64_t k_max);

/// Checks that full_degree_rank at (q + k*n, k) agrees with
/// config_betti(manifold, k)[q] for every supplied n and every q in range.
VerificationReport verify_n_independence(const ManifoldData& manifold, std::int64_t k,
                                         const std::vector<std::int64_t>& n_values);

}  // namespace conf2
