#pragma once

#include "conf2/confighomology.hpp"

namespace conf2 {

/// Query for the mod-2 cohomology series of the mapping class group of the
/// projective plane with k marked points.
struct McgQuery {
    std::int64_t k = 2;      // number of marked points, must be >= 2
    std::int64_t q_max = 0;  // truncation degree
};

/// Series of the polynomial algebra on the degree-2 and degree-3
/// Stiefel-Whitney classes: coefficient q is #{(a, b) >= 0 : 2a + 3b = q}.
PoincareSeries bso3_series(std::int64_t q_max);

/**
 * Mod-2 Poincare series of the mapping class group of the projective plane
 * with k marked points: the configuration-space series times the BSO(3)
 * series. Rejects k < 2, where the Borel-construction model underlying the
 * product is not aspherical.
 */
PoincareSeries mcg_rp2_series(const McgQuery& query);

/// Checks mcg_rp2_series at k = 2 against the order-8 dihedral group, whose
/// mod-2 cohomology series has coefficient q + 1 in degree q.
VerificationReport verify_k2_dihedral(std::int64_t q_max);

}  // namespace conf2
