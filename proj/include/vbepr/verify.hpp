#pragma once

// The invariant suite behind `vbepr verify`: every module's randomized
// property checks in one runnable list, each reporting its worst residual
// against a pinned tolerance.

#include <unsupported/Eigen/MatrixFunctions>

#include <functional>
#include <string>
#include <vector>

#include "vbepr/bell.hpp"
#include "vbepr/correlations.hpp"
#include "vbepr/kinematics.hpp"
#include "vbepr/observables.hpp"
#include "vbepr/polarization.hpp"
#include "vbepr/random.hpp"
#include "vbepr/spin.hpp"
#include "vbepr/states.hpp"

namespace vbepr {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass() const { return residual <= tolerance; }
};

struct VerifyOptions {
    /// Tolerance multiplier: 1.0 for the default profile, 0.1 for strict.
    double tol_scale = 1.0;
    std::uint64_t seed = 20260826;
    int trials = 1000;
    /// Injectable closed-form N/M/T evaluator; unit tests substitute a
    /// corrupted one to prove the two-path check catches it.
    std::function<NmtMatrices(const FourMomentum&, const Vec3&)> closed_form =
        [](const FourMomentum& q, const Vec3& w) {
            return nmt_closed_form(q, w);
        };
};

inline std::vector<CheckResult> run_verification(
    const VerifyOptions& opts = {}) {
    std::vector<CheckResult> out;
    const auto check = [&](const std::string& name, double tol,
                           const std::function<double(Rng&)>& worst) {
        Rng rng(opts.seed);
        double residual = 0.0;
        for (int i = 0; i < opts.trials; ++i)
            residual = std::max(residual, worst(rng));
        out.push_back(CheckResult{name, residual, tol * opts.tol_scale});
    };

    // --- kinematics ---
    check("kinematics/boost-maps-rest-to-k", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        return (standard_boost(k) * FourMomentum::rest().vec() - k.vec())
            .cwiseAbs()
            .maxCoeff();
    });
    check("kinematics/boost-pseudo-orthogonal", 1e-12, [](Rng& rng) {
        return lorentz_residual(standard_boost(random_momentum(rng)));
    });
    check("kinematics/wigner-cocycle", 1e-10, [](Rng& rng) {
        const Mat4 l1 = random_lorentz(rng), l2 = random_lorentz(rng);
        const FourMomentum k = random_momentum(rng);
        const Mat3 lhs = wigner_rotation(l1 * l2, k);
        const Mat3 rhs =
            wigner_rotation(l1, apply(l2, k)) * wigner_rotation(l2, k);
        return (lhs - rhs).cwiseAbs().maxCoeff();
    });
    check("kinematics/dot-lorentz-invariant", 1e-10, [](Rng& rng) {
        const Mat4 l = random_lorentz(rng);
        const FourMomentum u = random_momentum(rng), v = random_momentum(rng);
        return std::abs(minkowski_dot(apply(l, u), apply(l, v)) -
                        minkowski_dot(u, v));
    });

    // --- spin representation ---
    check("spin/d-matrix-exponential", 1e-9, [](Rng& rng) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        const Vec3 axis = random_unit(rng);
        const double phi = angle(rng);
        // With generators [I^i]_{jk} = -i eps_{ijk}, the rotation
        // e^{i phi a.I} is AngleAxis(-phi, a); so D o AngleAxis(phi)
        // must equal exp(-i phi a.S).
        const Mat3 r = Eigen::AngleAxisd(phi, axis).toRotationMatrix();
        const Mat3c expo =
            (Complex(0.0, -phi) * spin_component(axis)).exp();
        return (d_matrix(r) - expo).cwiseAbs().maxCoeff();
    });
    check("spin/vvt-antidiagonal", 1e-12, [](Rng&) {
        const Mat3c vvt = intertwiner() * intertwiner().transpose();
        return (vvt - intertwiner_vvt()).cwiseAbs().maxCoeff();
    });
    check("spin/minimal-polynomial", 1e-12, [](Rng& rng) {
        const Mat3c s = spin_component(random_unit(rng));
        return (s * s * s - s).cwiseAbs().maxCoeff();
    });
    check("spin/eigenprojectors-resolution", 1e-12, [](Rng& rng) {
        const Vec3 w = random_unit(rng);
        const auto sys = spin_eigensystem(w);
        Mat3c sum = Mat3c::Zero();
        Mat3c rebuilt = Mat3c::Zero();
        double worst = 0.0;
        for (const auto& pair : sys) {
            const Mat3c proj =
                pair.eigenvector * pair.eigenvector.adjoint();
            worst = std::max(worst,
                             (proj * proj - proj).cwiseAbs().maxCoeff());
            sum += proj;
            rebuilt += pair.eigenvalue * proj;
        }
        worst = std::max(worst, (sum - Mat3c::Identity()).cwiseAbs().maxCoeff());
        worst = std::max(
            worst, (rebuilt - spin_component(w)).cwiseAbs().maxCoeff());
        return worst;
    });

    // --- polarization ---
    check("polarization/transversality", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const Eigen::Matrix<Complex, 1, 3> res =
            (minkowski_metric().cast<Complex>() * k.vec().cast<Complex>())
                .transpose() *
            polarization(k);
        return res.cwiseAbs().maxCoeff();
    });
    check("polarization/orthonormality", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix e = polarization(k);
        const Mat3c gram = e.adjoint() *
                           minkowski_metric().cast<Complex>() * e;
        return (gram + Mat3c::Identity()).cwiseAbs().maxCoeff();
    });
    check("polarization/ee-contraction-vvt", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix e = polarization(k);
        const Mat3c gram =
            e.transpose() * minkowski_metric().cast<Complex>() * e;
        return (gram + intertwiner_vvt()).cwiseAbs().maxCoeff();
    });
    check("polarization/completeness", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix e = polarization(k);
        const Mat4c lhs = e.conjugate() * e.transpose();
        const Mat4c rhs = -minkowski_metric().cast<Complex>() +
                          (k.vec() * k.vec().transpose()).cast<Complex>();
        return (lhs - rhs).cwiseAbs().maxCoeff();
    });
    check("polarization/conjugation-vvt", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix e = polarization(k);
        return (e * intertwiner_vvt() - e.conjugate()).cwiseAbs().maxCoeff();
    });
    check("polarization/boost-of-rest-frame", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const PolarizationMatrix via_boost =
            standard_boost(k).cast<Complex>() * polarization_rest();
        return (polarization(k) - via_boost).cwiseAbs().maxCoeff();
    });
    check("polarization/weinberg-condition", 1e-10, [](Rng& rng) {
        return weinberg_residual(random_lorentz(rng), random_momentum(rng));
    });

    // --- states ---
    check("states/scalar-norm-closed-form", 1e-10, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const double kp = minkowski_dot(k, p);
        return std::abs(scalar_state(k, p).norm2() - (2.0 + kp * kp));
    });
    check("states/scalar-covariance", 1e-10, [](Rng& rng) {
        const Mat4 l = random_lorentz(rng);
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Mat3c dk = d_matrix(wigner_rotation(l, k));
        const Mat3c dp = d_matrix(wigner_rotation(l, p));
        const Mat3c transported =
            dk * scalar_state(k, p).psi * dp.transpose();
        const Mat3c direct = scalar_state(apply(l, k), apply(l, p)).psi;
        return (transported - direct).cwiseAbs().maxCoeff();
    });
    check("states/scalar-exchange-symmetry", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        return (scalar_state(k, p).psi.transpose() - scalar_state(p, k).psi)
            .cwiseAbs()
            .maxCoeff();
    });

    // --- observables ---
    check("observables/nmt-two-path", 1e-12, [&opts](Rng& rng) {
        const FourMomentum q = random_momentum(rng);
        const Vec3 w = random_unit(rng);
        const NmtMatrices def = nmt_definitional(q, w);
        const NmtMatrices closed = opts.closed_form(q, w);
        return std::max({(def.n - closed.n).cwiseAbs().maxCoeff(),
                         (def.m - closed.m).cwiseAbs().maxCoeff(),
                         (def.t - closed.t).cwiseAbs().maxCoeff()});
    });
    check("observables/m-plus-t-completeness", 1e-12, [](Rng& rng) {
        const FourMomentum q = random_momentum(rng);
        const NmtMatrices nmt = nmt_definitional(q, random_unit(rng));
        const Mat4c rhs = -minkowski_metric().cast<Complex>() +
                          (q.vec() * q.vec().transpose()).cast<Complex>();
        return (nmt.m + nmt.t - rhs).cwiseAbs().maxCoeff();
    });
    check("observables/oracle-vs-trace-formulas", 1e-10, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const ProbabilityTable oracle =
            probability_oracle(scalar_state(k, p), a, b);
        const ProbabilityTable trace = probabilities_general(k, p, a, b);
        return (oracle - trace).cwiseAbs().maxCoeff();
    });
    check("observables/oracle-phase-scale-invariance", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> scale(0.1, 10.0);
        TwoParticleAmplitude state = scalar_state(k, p);
        const ProbabilityTable base = probability_oracle(state, a, b);
        state.psi *= scale(rng) * std::exp(Complex(0.0, angle(rng)));
        return (probability_oracle(state, a, b) - base).cwiseAbs().maxCoeff();
    });

    // --- correlations ---
    check("correlations/table-sums-to-one", 1e-12, [](Rng& rng) {
        const ProbabilityTable table = probabilities_general(
            random_momentum(rng), random_momentum(rng), random_unit(rng),
            random_unit(rng));
        return std::abs(table.sum() - 1.0);
    });
    check("correlations/three-path-agreement", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const double closed = correlation_general(k, p, a, b);
        const double traced = correlation_trace(k, p, a, b);
        const double from_table =
            table_correlation(probabilities_general(k, p, a, b));
        return std::max(std::abs(closed - traced),
                        std::abs(closed - from_table));
    });
    check("correlations/cmf-specialization", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng);
        const FourMomentum p = FourMomentum::from_spatial(-k.p);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const Vec3 n = k.p.norm() > 0 ? Vec3(k.p.normalized())
                                      : Vec3(Vec3::UnitZ());
        const CmfConfig c = cmf_config_from_vectors(cmf_x(k), a, b, n);
        const double d_table = (probabilities_general(k, p, a, b) -
                                cmf_probabilities(c))
                                   .cwiseAbs()
                                   .maxCoeff();
        const double d_corr =
            std::abs(correlation_general(k, p, a, b) - cmf_correlation(c));
        return std::max(d_table, d_corr);
    });
    check("correlations/exchange-symmetry", 1e-12, [](Rng& rng) {
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        return (probabilities_general(k, p, a, b).transpose() -
                probabilities_general(p, k, b, a))
            .cwiseAbs()
            .maxCoeff();
    });
    check("correlations/rotational-covariance", 1e-10, [](Rng& rng) {
        const Mat3 r = random_rotation(rng);
        const FourMomentum k = random_momentum(rng), p = random_momentum(rng);
        const Vec3 a = random_unit(rng), b = random_unit(rng);
        const ProbabilityTable rotated = probabilities_general(
            FourMomentum::from_spatial(r * k.p),
            FourMomentum::from_spatial(r * p.p), r * a, r * b);
        return (rotated - probabilities_general(k, p, a, b))
            .cwiseAbs()
            .maxCoeff();
    });
    check("correlations/bounded-by-one", 1e-12, [](Rng& rng) {
        const double c =
            correlation_general(random_momentum(rng), random_momentum(rng),
                                random_unit(rng), random_unit(rng));
        return std::max(0.0, std::abs(c) - 1.0);
    });

    // --- bell ---
    check("bell/mermin-closed-form", 1e-12, [](Rng& rng) {
        std::uniform_real_distribution<double> xdist(0.0, 10.0);
        const double x = xdist(rng);
        // theta = pi/6 realizes a + b + c = 0, all perpendicular to n.
        const BellConfig cfg = coplanar_config(M_PI / 6.0, x);
        const double y = 1.0 + 2.0 * x;
        return std::abs(mermin_lhs(cfg) - 3.0 * y / (2.0 + y * y));
    });
    check("bell/coplanar-vs-vector-form", 1e-12, [](Rng& rng) {
        std::uniform_real_distribution<double> tdist(0.0, M_PI);
        std::uniform_real_distribution<double> xdist(0.0, 10.0);
        const double theta = tdist(rng);
        const double x = xdist(rng);
        return std::abs(weighted_lhs(coplanar_config(theta, x)) -
                        coplanar_lhs(theta, x));
    });
    check("bell/rotation-about-n-invariance", 1e-12, [](Rng& rng) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> xdist(0.0, 10.0);
        BellConfig cfg;
        cfg.n = Vec3::UnitZ();
        cfg.a = random_unit(rng);
        cfg.b = random_unit(rng);
        cfg.c = random_unit(rng);
        cfg.d = random_unit(rng);
        cfg.x = xdist(rng);
        const Mat3 r =
            Eigen::AngleAxisd(angle(rng), Vec3::UnitZ()).toRotationMatrix();
        BellConfig rot = cfg;
        rot.a = r * cfg.a;
        rot.b = r * cfg.b;
        rot.c = r * cfg.c;
        rot.d = r * cfg.d;
        return std::max(
            {std::abs(chsh_lhs(rot) - chsh_lhs(cfg)),
             std::abs(mermin_lhs(rot) - mermin_lhs(cfg)),
             std::abs(weighted_lhs(rot) - weighted_lhs(cfg))});
    });

    return out;
}

}  // namespace vbepr
