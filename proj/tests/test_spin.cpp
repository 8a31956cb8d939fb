#include <catch_amalgamated.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "vbepr/random.hpp"
#include "vbepr/spin.hpp"

using namespace vbepr;

namespace {
double cnorm(const Mat3c& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("spin matrices") {
    const Mat3c expected_z =
        Vec3(1.0, 0.0, -1.0).asDiagonal().toDenseMatrix().cast<Complex>();
    CHECK(cnorm(spin_z() - expected_z) < 1e-15);

    // su(2) algebra: [S^1, S^2] = i S^3 and cyclic.
    const auto s = spin_matrices();
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        CHECK(cnorm(s[i] * s[j] - s[j] * s[i] - Complex(0, 1) * s[k]) < 1e-15);
        CHECK(cnorm(s[i] - s[i].adjoint()) < 1e-15);
    }

    // Spin-1 signature: (n.S)^3 = n.S for any unit n.
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat3c sn = spin_component(random_unit(rng));
        CHECK(cnorm(sn * sn * sn - sn) < 1e-14);
        CHECK(std::abs((sn * sn).trace().real() - 2.0) < 1e-14);
    }

    CHECK_THROWS_AS(spin_component(Vec3(1.0, 1.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("intertwiner") {
    const Mat3c& v = intertwiner();
    CHECK(cnorm(v * v.adjoint() - Mat3c::Identity()) < 1e-15);
    Mat3c vvt = Mat3c::Zero();
    vvt(0, 2) = -1.0;
    vvt(1, 1) = 1.0;
    vvt(2, 0) = -1.0;
    CHECK(cnorm(v * v.transpose() - vvt) < 1e-15);
    CHECK(cnorm(intertwiner_vvt() - vvt) < 1e-15);
}

TEST_CASE("d_matrix is the spin-1 representation") {
    CHECK(cnorm(d_matrix(Mat3::Identity()) - Mat3c::Identity()) < 1e-15);

    // Active rotation convention: D(AngleAxis(phi, a)) = exp(-i phi a.S).
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 axis = random_unit(rng);
        const double phi = 2.0 * M_PI * (trial + 0.5) / 50.0;
        const Mat3 r = Eigen::AngleAxisd(phi, axis).toRotationMatrix();
        const Mat3c expected =
            (Complex(0.0, -phi) * spin_component(axis)).exp();
        CHECK(cnorm(d_matrix(r) - expected) < 1e-12);
    }

    // Rotation about z: diag(e^{i phi}, 1, e^{-i phi}).
    const double phi = 0.37;
    const Mat3c dz =
        d_matrix(Eigen::AngleAxisd(phi, Vec3::UnitZ()).toRotationMatrix());
    Mat3c expected = Mat3c::Zero();
    expected(0, 0) = std::exp(Complex(0.0, -phi));
    expected(1, 1) = 1.0;
    expected(2, 2) = std::exp(Complex(0.0, phi));
    CHECK(cnorm(dz - expected) < 1e-14);

    // Homomorphism and unitarity.
    for (int trial = 0; trial < 200; ++trial) {
        const Mat3 r1 = random_rotation(rng), r2 = random_rotation(rng);
        CHECK(cnorm(d_matrix(r1 * r2) - d_matrix(r1) * d_matrix(r2)) < 1e-12);
        const Mat3c d = d_matrix(r1);
        CHECK(cnorm(d * d.adjoint() - Mat3c::Identity()) < 1e-13);
    }
}

TEST_CASE("spin_eigensystem") {
    const auto ez = spin_eigensystem(Vec3::UnitZ());
    CHECK(ez[0].eigenvalue == Catch::Approx(1.0).margin(1e-14));
    CHECK(ez[1].eigenvalue == Catch::Approx(0.0).margin(1e-14));
    CHECK(ez[2].eigenvalue == Catch::Approx(-1.0).margin(1e-14));
    CHECK((ez[0].eigenvector - Vec3c(1, 0, 0)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((ez[1].eigenvector - Vec3c(0, 1, 0)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((ez[2].eigenvector - Vec3c(0, 0, 1)).cwiseAbs().maxCoeff() < 1e-14);

    // x axis, +1 eigenvector: (1, sqrt 2, 1)/2 up to the phase convention.
    const auto ex = spin_eigensystem(Vec3::UnitX());
    const Vec3c expected(0.5, std::sqrt(2.0) / 2.0, 0.5);
    CHECK((ex[0].eigenvector - expected).cwiseAbs().maxCoeff() < 1e-12);

    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec3 w = random_unit(rng);
        const auto sys = spin_eigensystem(w);
        const Mat3c sw = spin_component(w);
        Mat3c resolution = Mat3c::Zero();
        for (const auto& pair : sys) {
            CHECK((sw * pair.eigenvector -
                   pair.eigenvalue * pair.eigenvector)
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            CHECK(std::abs(pair.eigenvector.norm() - 1.0) < 1e-13);
            resolution += pair.eigenvalue * pair.eigenvector *
                          pair.eigenvector.adjoint();
            // Phase convention: a largest-magnitude component is real
            // positive.  Checked up to ulp-level ties in the magnitudes.
            double mag_max = 0.0;
            for (int i = 0; i < 3; ++i)
                mag_max = std::max(mag_max, std::abs(pair.eigenvector(i)));
            bool anchored = false;
            for (int i = 0; i < 3; ++i) {
                const Complex c = pair.eigenvector(i);
                if (std::abs(c) >= mag_max * (1.0 - 1e-9))
                    anchored = anchored ||
                               (c.real() > 0.0 && std::abs(c.imag()) < 1e-12);
            }
            CHECK(anchored);
        }
        CHECK(cnorm(resolution - sw) < 1e-12);
        CHECK(sys[0].eigenvalue == Catch::Approx(1.0).margin(1e-12));
        CHECK(sys[1].eigenvalue == Catch::Approx(0.0).margin(1e-12));
        CHECK(sys[2].eigenvalue == Catch::Approx(-1.0).margin(1e-12));
    }
}
