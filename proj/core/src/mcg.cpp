#include "conf2/mcg.hpp"

#include <stdexcept>

namespace conf2 {

PoincareSeries bso3_series(std::int64_t q_max) {
    if (q_max < 0) throw std::invalid_argument("bso3_series: q_max must be >= 0");
    std::vector<Count> coefficients(static_cast<std::size_t>(q_max) + 1, Count(0));
    for (std::int64_t b = 0; 3 * b <= q_max; ++b)
        for (std::int64_t a = 0; 2 * a + 3 * b <= q_max; ++a)
            ++coefficients[static_cast<std::size_t>(2 * a + 3 * b)];
    return PoincareSeries(std::move(coefficients));
}

PoincareSeries mcg_rp2_series(const McgQuery& query) {
    if (query.k < 2)
        throw std::invalid_argument(
            "mcg_rp2_series: k must be >= 2; the Borel construction over the k-point "
            "configuration space of the projective plane is aspherical only for k >= 2, "
            "so the series product is asserted only there");
    if (query.q_max < 0) throw std::invalid_argument("mcg_rp2_series: q_max must be >= 0");
    return series_product(config_betti(projective_plane(), query.k), bso3_series(query.q_max),
                          query.q_max);
}

VerificationReport verify_k2_dihedral(std::int64_t q_max) {
    if (q_max < 0) throw std::invalid_argument("verify_k2_dihedral: q_max must be >= 0");
    VerificationReport report{"dihedral", {}};
    const auto series = mcg_rp2_series({2, q_max});
    // the order-8 dihedral series (1+t)/((1-t)(1-t^2)) expands to q + 1
    for (std::int64_t q = 0; q <= q_max; ++q)
        add_check(report, "q=" + std::to_string(q), Count(q + 1), series.coefficient(q));
    return report;
}

}  // namespace conf2
