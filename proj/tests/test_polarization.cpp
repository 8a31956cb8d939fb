#include <catch_amalgamated.hpp>

#include "vbepr/polarization.hpp"
#include "vbepr/random.hpp"
#include "vbepr/spin.hpp"
#include "vbepr/states.hpp"

using namespace vbepr;

TEST_CASE("rest-frame polarization") {
    const PolarizationMatrix& e = polarization_rest();
    CHECK(e.row(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK((e.block<3, 3>(1, 0) - intertwiner().transpose())
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    CHECK((polarization(FourMomentum::rest()) - e).cwiseAbs().maxCoeff() <
          1e-15);
}

TEST_CASE("polarization algebraic identities") {
    Rng rng(31);
    const Mat4c eta = minkowski_metric().cast<Complex>();
    for (int trial = 0; trial < 300; ++trial) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix e = polarization(k);

        // Transversality k_mu e^mu_sigma = 0.
        CHECK((k.vec().transpose().cast<Complex>() * eta * e)
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);

        // Orthonormality e*^mu_s eta_{mu nu} e^nu_l = -delta_{sl}.
        CHECK((e.adjoint() * eta * e + Mat3c::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);

        // Completeness sum_s e^mu_s e*^nu_s = -eta^{mu nu} + k^mu k^nu.
        const Mat4c completeness = e * e.adjoint();
        const Mat4c expected =
            (-minkowski_metric() + k.vec() * k.vec().transpose())
                .cast<Complex>();
        CHECK((completeness - expected).cwiseAbs().maxCoeff() < 1e-12);

        // Conjugation e*^mu_s = e^mu_l (V V^T)_{ls}.
        CHECK((e.conjugate() - e * intertwiner_vvt()).cwiseAbs().maxCoeff() <
              1e-12);

        // Boost path: e(k) = L_k e(rest).
        CHECK((e - standard_boost(k).cast<Complex>() * polarization_rest())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("transformation law") {
    CHECK(weinberg_residual(Mat4::Identity(), FourMomentum::rest()) <
          1e-15);

    Rng rng(37);
    // Lambda = L_q acting on the rest momentum: the Wigner rotation is
    // trivial, so e(q) = L_q e(rest) exactly.
    for (int trial = 0; trial < 50; ++trial)
        CHECK(weinberg_residual(standard_boost(random_momentum(rng)),
                                FourMomentum::rest()) < 1e-12);

    for (int trial = 0; trial < 300; ++trial)
        CHECK(weinberg_residual(random_lorentz(rng), random_momentum(rng)) <
              1e-10);
}
