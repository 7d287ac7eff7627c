#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conf2/confighomology.hpp"

#include "oracles.hpp"

#include <future>
#include <map>
#include <set>
#include <stdexcept>

using conf2::Count;
using conf2::ManifoldData;
using conf2::PoincareSeries;
using conf2::testing::counts;

namespace {

// multiset view of a generator block: (handle degree, reduced degree, weight, exterior)
std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, bool>, int> shape(
    const std::vector<conf2::GeneratorSpec>& gens) {
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, bool>, int> out;
    for (const auto& g : gens)
        ++out[{g.handle_degree, g.reduced_degree, g.weight, g.exterior}];
    return out;
}

}  // namespace

TEST_CASE("surface constructors and validation") {
    CHECK(conf2::projective_plane().mod2_betti == std::vector<std::int64_t>{1, 1, 1});
    CHECK(conf2::klein_bottle().mod2_betti == std::vector<std::int64_t>{1, 2, 1});
    CHECK(conf2::sphere().mod2_betti == std::vector<std::int64_t>{1, 0, 1});
    CHECK(conf2::torus().mod2_betti == std::vector<std::int64_t>{1, 2, 1});
    CHECK(conf2::orientable_surface(3).mod2_betti == std::vector<std::int64_t>{1, 6, 1});
    CHECK(conf2::nonorientable_surface(4).mod2_betti == std::vector<std::int64_t>{1, 4, 1});
    CHECK_THROWS_AS(conf2::nonorientable_surface(0), std::invalid_argument);
    CHECK_THROWS_AS(conf2::orientable_surface(-1), std::invalid_argument);

    CHECK_THROWS_AS(conf2::validate_manifold(ManifoldData{2, {2, 1, 1}, "bad"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(conf2::validate_manifold(ManifoldData{2, {1, 1}, "short"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(conf2::validate_manifold(ManifoldData{0, {1}, "point"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(conf2::validate_manifold(ManifoldData{2, {1, -1, 1}, "neg"}),
                    std::invalid_argument);
}

TEST_CASE("bct_generators: projective plane, genus-3 surface, sphere") {
    const auto rp2 = conf2::bct_generators(conf2::projective_plane(), 4);
    // y_0, y_1, y_2 tower, one degree-1 class, one exterior top class
    CHECK(shape(rp2) ==
          std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, bool>, int>{
              {{0, 0, 1, false}, 1},
              {{0, 1, 2, false}, 1},
              {{0, 3, 4, false}, 1},
              {{1, 1, 1, false}, 1},
              {{2, 2, 1, true}, 1}});

    const auto n3 = conf2::bct_generators(conf2::nonorientable_surface(3), 2);
    CHECK(shape(n3) ==
          std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, bool>, int>{
              {{0, 0, 1, false}, 1},
              {{0, 1, 2, false}, 1},
              {{1, 1, 1, false}, 3},
              {{2, 2, 1, true}, 1}});

    const auto s2 = conf2::bct_generators(conf2::sphere(), 2);
    CHECK(shape(s2) ==
          std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, bool>, int>{
              {{0, 0, 1, false}, 1}, {{0, 1, 2, false}, 1}, {{2, 2, 1, true}, 1}});

    // ids stay unique across the three copies of the degree-1 block
    std::set<std::string> ids;
    for (const auto& g : n3) CHECK(ids.insert(g.id).second);
}

TEST_CASE("config_betti: golden tables") {
    CHECK(conf2::config_betti(conf2::projective_plane(), 3) ==
          PoincareSeries(counts({1, 2, 3, 3, 1})));
    CHECK(conf2::config_betti(conf2::projective_plane(), 4) ==
          PoincareSeries(counts({1, 2, 4, 5, 3, 1})));
    CHECK(conf2::config_betti(conf2::nonorientable_surface(3), 2) ==
          PoincareSeries(counts({1, 4, 7, 3})));
    CHECK(conf2::config_betti(conf2::projective_plane(), 0) == PoincareSeries(counts({1})));
    CHECK_THROWS_AS(conf2::config_betti(conf2::projective_plane(), -1),
                    std::invalid_argument);
}

TEST_CASE("config_betti at k = 1 returns the Betti vector of the surface") {
    for (const auto& manifold : conf2::builtin_surfaces()) {
        const auto series = conf2::config_betti(manifold, 1);
        REQUIRE(series.q_max() == 2);
        for (std::int64_t q = 0; q <= 2; ++q)
            CHECK(series.coefficient(q) == manifold.mod2_betti[static_cast<std::size_t>(q)]);
    }
}

TEST_CASE("config_betti: genus formula for two points on N_g") {
    for (std::int64_t g = 1; g <= 10; ++g) {
        const auto series = conf2::config_betti(conf2::nonorientable_surface(g), 2);
        CHECK(series ==
              PoincareSeries(counts({1, g + 1, 1 + (g * g + g) / 2, g})));
    }
}

TEST_CASE("braid_betti: small groups and conventions") {
    CHECK(conf2::braid_betti(0) == PoincareSeries(counts({1})));
    CHECK(conf2::braid_betti(1) == PoincareSeries(counts({1})));
    CHECK(conf2::braid_betti(2) == PoincareSeries(counts({1, 1})));
    CHECK(conf2::braid_betti(3) == PoincareSeries(counts({1, 1})));
    CHECK(conf2::braid_betti(4) == PoincareSeries(counts({1, 1, 1, 1})));
    CHECK_THROWS_AS(conf2::braid_betti(-1), std::invalid_argument);
}

TEST_CASE("braid_betti: vanishing above q = k - 1 and oracle agreement") {
    for (std::int64_t k = 1; k <= 10; ++k) {
        const auto series = conf2::braid_betti(k);
        CHECK(series.q_max() <= k - 1);
        // independent count of weight-k monomials in the tower
        std::vector<conf2::GeneratorSpec> tower;
        for (std::int64_t j = 0; (std::int64_t{1} << j) <= k; ++j) {
            conf2::GeneratorSpec g;
            g.id = "t" + std::to_string(j);
            g.reduced_degree = (std::int64_t{1} << j) - 1;
            g.weight = std::int64_t{1} << j;
            tower.push_back(std::move(g));
        }
        const auto brute = conf2::testing::brute_force_rank_table(tower, k, k);
        for (std::int64_t q = 0; q <= k; ++q)
            CHECK(series.coefficient_or_zero(q) == brute.rank(k, q));
    }
}

TEST_CASE("rp2_betti_via_braids: examples") {
    CHECK(conf2::rp2_betti_via_braids(3, 2) == 3);
    for (std::int64_t k = 1; k <= 6; ++k) CHECK(conf2::rp2_betti_via_braids(k, 0) == 1);
    CHECK(conf2::rp2_betti_via_braids(4, 5) == 1);
    CHECK_THROWS_AS(conf2::rp2_betti_via_braids(0, 0), std::invalid_argument);
}

TEST_CASE("verify_braid_decomposition passes on small ranges") {
    const auto one = conf2::verify_braid_decomposition(1);
    CHECK(one.passed());

    const auto report = conf2::verify_braid_decomposition(6);
    CHECK(report.passed());
    CHECK(report.failure_count() == 0);
    // one check per (k, q) cell with 1 <= k <= 6, 0 <= q <= k + 2
    CHECK(report.checks.size() == 39);
    CHECK_THROWS_AS(conf2::verify_braid_decomposition(0), std::invalid_argument);
}

TEST_CASE("verify_n_independence passes for the examples") {
    CHECK(conf2::verify_n_independence(conf2::projective_plane(), 3, {1, 2, 3}).passed());
    CHECK(conf2::verify_n_independence(conf2::nonorientable_surface(3), 2, {1, 2}).passed());

    const auto trivial = conf2::verify_n_independence(conf2::projective_plane(), 0, {1, 2});
    CHECK(trivial.passed());
    CHECK(trivial.checks.front().actual == 1);  // the single rank at q = 0

    CHECK_THROWS_AS(conf2::verify_n_independence(conf2::projective_plane(), 3, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(conf2::verify_n_independence(conf2::projective_plane(), 3, {}),
                    std::invalid_argument);
}

TEST_CASE("connectedness, vanishing bound, stability") {
    for (const auto& manifold : conf2::builtin_surfaces()) {
        PoincareSeries previous(counts({1}));
        for (std::int64_t k = 1; k <= 10; ++k) {
            const auto series = conf2::config_betti(manifold, k);
            CHECK(series.coefficient(0) == 1);
            CHECK(series.q_max() <= k + 1);  // trimmed, so nothing survives past k + 1
            for (std::int64_t q = 0; q <= series.q_max(); ++q)
                CHECK(previous.coefficient_or_zero(q) <= series.coefficient(q));
            previous = series;
        }
    }
}

TEST_CASE("pure queries evaluate safely in parallel") {
    std::vector<std::future<PoincareSeries>> jobs;
    for (const auto& manifold : conf2::builtin_surfaces())
        for (std::int64_t k = 1; k <= 6; ++k)
            jobs.push_back(std::async(std::launch::async,
                                      [manifold, k] { return conf2::config_betti(manifold, k); }));
    std::size_t idx = 0;
    for (const auto& manifold : conf2::builtin_surfaces())
        for (std::int64_t k = 1; k <= 6; ++k)
            CHECK(jobs[idx++].get() == conf2::config_betti(manifold, k));
}
