#include <catch_amalgamated.hpp>

#include "vbepr/correlations.hpp"
#include "vbepr/random.hpp"

using namespace vbepr;

namespace {
FourMomentum cmf_momentum(double x, const Vec3& n) {
    return FourMomentum::from_spatial(std::sqrt(x) * n);
}
}  // namespace

TEST_CASE("general probabilities: normalization and limits") {
    Rng rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const FourMomentum k = random_momentum(rng);
        const FourMomentum p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const ProbabilityTable table = probabilities_general(k, p, a, b);
        CHECK(table.sum() == Catch::Approx(1.0).margin(1e-12));
        CHECK(table.minCoeff() > -1e-12);
        // Three correlation paths agree.
        const double via_table = table_correlation(table);
        CHECK(std::abs(via_table - correlation_general(k, p, a, b)) < 1e-12);
        CHECK(std::abs(via_table - correlation_trace(k, p, a, b)) < 1e-12);
    }

    // Both particles at rest: the nonrelativistic singlet.
    const FourMomentum rest = FourMomentum::rest();
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        CHECK((probabilities_general(rest, rest, a, b) -
               nonrel_probabilities(a.dot(b)))
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);
        CHECK(correlation_general(rest, rest, a, b) ==
              Catch::Approx(-2.0 / 3.0 * a.dot(b)).margin(1e-13));
    }

    CHECK_THROWS_AS(probabilities_general(rest, rest, Vec3(2, 0, 0),
                                          Vec3::UnitZ()),
                    std::invalid_argument);
}

TEST_CASE("CMF specialization matches the general formulas") {
    Rng rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec3 n = random_unit(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const double x = std::uniform_real_distribution<>(0.0, 9.0)(rng);
        const FourMomentum k = cmf_momentum(x, n);
        const FourMomentum p = cmf_momentum(x, -n);
        const CmfConfig cfg = cmf_config_from_vectors(x, a, b, n);
        CHECK((cmf_probabilities(cfg) - probabilities_general(k, p, a, b))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        CHECK(std::abs(cmf_correlation(cfg) -
                       correlation_general(k, p, a, b)) < 1e-12);
    }
}

TEST_CASE("CMF pinned values") {
    // Perpendicular configuration a.b = -1, a.n = b.n = 0.
    const CmfConfig perp{0.5, -1.0, 0.0, 0.0};
    CHECK(cmf_probabilities(perp)(0, 0) == Catch::Approx(3.0 / 8.0));

    const double xm = (std::sqrt(2.0) - 1.0) / 2.0;
    CHECK(cmf_correlation(CmfConfig{xm, -1.0, 0.0, 0.0}) ==
          Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-14));
    CHECK(cmf_correlation(CmfConfig{0.0, -1.0, 0.0, 0.0}) ==
          Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(std::abs(cmf_correlation(CmfConfig{1e12, -1.0, 0.0, 0.0})) <
          1e-11);

    // Half configuration a.b = -1/2, a.n = b.n = 1/2: the correlation
    // peaks at x = (sqrt 19 - 2)/6 with value (sqrt 19 - 1)/8.
    const double xh = (std::sqrt(19.0) - 2.0) / 6.0;
    CHECK(cmf_correlation(CmfConfig{xh, -0.5, 0.5, 0.5}) ==
          Catch::Approx((std::sqrt(19.0) - 1.0) / 8.0).margin(1e-14));

    CHECK_THROWS_AS(cmf_probabilities(CmfConfig{1.0, 1.0, 1.0, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmf_probabilities(CmfConfig{-0.5, 0.0, 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("ultra-relativistic limit") {
    // Pinned table at a.n = b.n = 0: P_{s l} = 1/4 on nonzero outcomes.
    const ProbabilityTable flat = ultrarel_probabilities(0.0, 0.0);
    CHECK(flat(0, 0) == Catch::Approx(0.25));
    CHECK(flat(1, 1) == 0.0);
    CHECK(flat.sum() == Catch::Approx(1.0).margin(1e-14));

    // a = b = n pins everything on (0, 0).
    const ProbabilityTable pinned = ultrarel_probabilities(1.0, 1.0);
    CHECK(pinned(1, 1) == Catch::Approx(1.0));

    // Convergence of the exact CMF table at x = 1e6.
    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 n = random_unit(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const CmfConfig cfg = cmf_config_from_vectors(1e6, a, b, n);
        CHECK((cmf_probabilities(cfg) -
               ultrarel_probabilities(cfg.an, cfg.bn))
                  .cwiseAbs()
                  .maxCoeff() < 1e-5);
        CHECK(std::abs(cmf_correlation(cfg)) < 1e-5);
    }
    CHECK_THROWS_AS(ultrarel_probabilities(1.5, 0.0),
                    std::invalid_argument);
}

TEST_CASE("nonrelativistic singlet tables") {
    const ProbabilityTable anti = nonrel_probabilities(-1.0);
    CHECK(anti(0, 0) == Catch::Approx(1.0 / 3.0));
    CHECK(anti(1, 1) == Catch::Approx(1.0 / 3.0));
    CHECK(anti(2, 2) == Catch::Approx(1.0 / 3.0));
    CHECK(anti(0, 2) == Catch::Approx(0.0).margin(1e-15));

    const ProbabilityTable ortho = nonrel_probabilities(0.0);
    CHECK(ortho(0, 0) == Catch::Approx(1.0 / 12.0));
    CHECK(ortho(1, 1) == Catch::Approx(0.0).margin(1e-15));
    CHECK(ortho(0, 1) == Catch::Approx(1.0 / 6.0));
    CHECK(ortho.sum() == Catch::Approx(1.0).margin(1e-14));
    CHECK_THROWS_AS(nonrel_probabilities(-1.1), std::invalid_argument);
}

TEST_CASE("normalized correlation") {
    const FourMomentum rest = FourMomentum::rest();
    CHECK(normalized_correlation(rest, rest, Vec3::UnitZ(), -Vec3::UnitZ()) ==
          Catch::Approx(1.0).margin(1e-13));
    CHECK(normalized_correlation(rest, rest, Vec3::UnitZ(), Vec3::UnitX()) ==
          Catch::Approx(0.0).margin(1e-13));

    Rng rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        const FourMomentum k = random_momentum(rng);
        const FourMomentum p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        // Conditioning on nonzero outcomes can only amplify.
        CHECK(std::abs(normalized_correlation(k, p, a, b)) + 1e-12 >=
              std::abs(correlation_general(k, p, a, b)));
    }
}

TEST_CASE("extremum_scan") {
    const ScanGrid grid{1e-4, 10.0, 512, true};

    // Perpendicular-configuration correlation: single interior maximum.
    const CmfConfig perp{0.0, -1.0, 0.0, 0.0};
    auto found = extremum_scan(perp, CmfQuantity::correlation, grid);
    REQUIRE(found.size() == 1);
    CHECK(found[0].is_maximum);
    CHECK(found[0].x ==
          Catch::Approx((std::sqrt(2.0) - 1.0) / 2.0).margin(1e-6));
    CHECK(found[0].value ==
          Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-10));

    // P_{++} in the same configuration peaks at x = 1/2 with value 3/8.
    found = extremum_scan(perp, CmfQuantity::p_pp, grid);
    REQUIRE(found.size() == 1);
    CHECK(found[0].is_maximum);
    CHECK(found[0].x == Catch::Approx(0.5).margin(1e-6));
    CHECK(found[0].value == Catch::Approx(3.0 / 8.0).margin(1e-10));

    // a.b = -1/2, a.n = b.n = 1/2: P_00 dips to zero at x = 1 and
    // P_{+-} to zero at x = 1/3.
    const CmfConfig half{0.0, -0.5, 0.5, 0.5};
    found = extremum_scan(half, CmfQuantity::p_00, grid);
    REQUIRE(found.size() == 1);
    CHECK_FALSE(found[0].is_maximum);
    CHECK(found[0].x == Catch::Approx(1.0).margin(1e-5));
    CHECK(found[0].value == Catch::Approx(0.0).margin(1e-10));

    found = extremum_scan(half, CmfQuantity::p_pm, grid);
    REQUIRE(found.size() == 1);
    CHECK_FALSE(found[0].is_maximum);
    CHECK(found[0].x == Catch::Approx(1.0 / 3.0).margin(1e-5));
    CHECK(found[0].value == Catch::Approx(0.0).margin(1e-10));

    // Monotone quantity: no interior extrema reported.
    CHECK(extremum_scan(CmfConfig{0.0, -1.0, 0.0, 0.0}, CmfQuantity::p_00,
                        grid)
              .empty());

    CHECK_THROWS_AS(extremum_scan([](double x) { return x; },
                                  ScanGrid{0.0, 1.0, 2, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(extremum_scan([](double x) { return x; },
                                  ScanGrid{1.0, 0.0, 10, false}),
                    std::invalid_argument);
}
