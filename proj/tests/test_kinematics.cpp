#include <catch_amalgamated.hpp>

#include "vbepr/kinematics.hpp"
#include "vbepr/random.hpp"

using namespace vbepr;

TEST_CASE("minkowski_dot basics") {
    const FourMomentum rest = FourMomentum::rest();
    CHECK(minkowski_dot(rest, rest) == Catch::Approx(1.0).margin(1e-15));

    const FourMomentum null_vec{1.0, Vec3(1.0, 0.0, 0.0)};
    CHECK(minkowski_dot(null_vec, null_vec) ==
          Catch::Approx(0.0).margin(1e-15));

    // CMF pair: k.p = 1 + 2x.
    const Vec3 kv(0.4, -1.1, 0.7);
    const FourMomentum k = FourMomentum::from_spatial(kv);
    const FourMomentum p = FourMomentum::from_spatial(-kv);
    CHECK(minkowski_dot(k, p) ==
          Catch::Approx(1.0 + 2.0 * kv.squaredNorm()).margin(1e-12));
}

TEST_CASE("standard_boost maps rest momentum to k") {
    CHECK((standard_boost(FourMomentum::rest()) - Mat4::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    const FourMomentum k = FourMomentum::from_spatial(Vec3(0, 0, 1));
    const Vec4 boosted = standard_boost(k) * FourMomentum::rest().vec();
    CHECK((boosted - Vec4(std::sqrt(2.0), 0, 0, 1)).cwiseAbs().maxCoeff() <
          1e-15);

    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const FourMomentum q = random_momentum(rng);
        CHECK(lorentz_residual(standard_boost(q)) < 1e-12);
        CHECK((standard_boost(q) * FourMomentum::rest().vec() - q.vec())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("wigner_rotation special cases") {
    const FourMomentum rest = FourMomentum::rest();
    const FourMomentum k = FourMomentum::from_spatial(Vec3(0.3, -0.2, 0.9));

    // R(L_k, rest) = identity.
    CHECK((wigner_rotation(standard_boost(k), rest) - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    // Pure rotations stabilize the rest momentum.
    Rng rng(5);
    const Mat3 r0 = random_rotation(rng);
    Mat4 embedded = Mat4::Identity();
    embedded.block<3, 3>(1, 1) = r0;
    CHECK((wigner_rotation(embedded, rest) - r0).cwiseAbs().maxCoeff() <
          1e-12);

    // Boost along x acting on momentum along z: nontrivial but orthogonal.
    const Mat4 boost_x =
        standard_boost(FourMomentum::from_spatial(Vec3(1.2, 0, 0)));
    const FourMomentum kz = FourMomentum::from_spatial(Vec3(0, 0, 0.8));
    const Mat3 r = wigner_rotation(boost_x, kz);
    CHECK((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((r - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("wigner_rotation rejects broken input") {
    Mat4 not_lorentz = Mat4::Identity();
    not_lorentz(0, 2) = 0.5;
    CHECK_THROWS_AS(wigner_rotation(not_lorentz, FourMomentum::rest()),
                    std::runtime_error);
}

TEST_CASE("wigner cocycle and dot invariance") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const Mat4 l1 = random_lorentz(rng), l2 = random_lorentz(rng);
        const FourMomentum k = random_momentum(rng);
        const Mat3 lhs = wigner_rotation(l1 * l2, k);
        const Mat3 rhs =
            wigner_rotation(l1, apply(l2, k)) * wigner_rotation(l2, k);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);

        const FourMomentum u = random_momentum(rng), v = random_momentum(rng);
        CHECK(minkowski_dot(apply(l1, u), apply(l1, v)) ==
              Catch::Approx(minkowski_dot(u, v)).margin(1e-10));
        CHECK(minkowski_dot(u, v) ==
              Catch::Approx(minkowski_dot(v, u)).margin(1e-15));
    }
}

TEST_CASE("cmf_x") {
    CHECK(cmf_x(FourMomentum::rest()) == 0.0);
    CHECK(cmf_x(FourMomentum::from_spatial(Vec3(1, 0, 0))) ==
          Catch::Approx(1.0));
    const double xm = (std::sqrt(2.0) - 1.0) / 2.0;
    const Vec3 kv = std::sqrt(xm) * Vec3(0, 0, 1);
    CHECK(cmf_x(FourMomentum::from_spatial(kv)) ==
          Catch::Approx(xm).margin(1e-15));
}
