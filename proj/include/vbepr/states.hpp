#pragma once

// Covariant two-boson amplitudes at sharp momenta: the scalar state, the
// symmetric-traceless and antisymmetric tensor states, and the contraction
// from covariant (four-index) to spin-label amplitudes.

#include <Eigen/Dense>

#include <stdexcept>

#include "vbepr/kinematics.hpp"
#include "vbepr/polarization.hpp"

namespace vbepr {

using Mat4c = Eigen::Matrix4cd;

/// Unnormalized spin-label amplitude psi_{sigma lambda}(k,p); Alice's
/// label indexes rows, Bob's columns, both ordered (+1, 0, -1).
struct TwoParticleAmplitude {
    Mat3c psi;
    FourMomentum k;
    FourMomentum p;

    double norm2() const { return psi.squaredNorm(); }
};

/// Scalar state psi_{sigma lambda} = eta_{mu nu} e^mu_sigma(k) e^nu_lambda(p).
inline TwoParticleAmplitude scalar_state(const FourMomentum& k,
                                         const FourMomentum& p) {
    const Mat3c psi = polarization(k).transpose() *
                      minkowski_metric().cast<Complex>() * polarization(p);
    return TwoParticleAmplitude{psi, k, p};
}

enum class TensorKind { symmetric, antisymmetric };

/// Coefficient of the (mu,nu) tensor state over the contracted basis
/// indices (alpha,beta), with alpha and beta lowered:
///   symmetric:      1/2 (d d + d d - 1/2 eta eta)
///   antisymmetric:  1/2 (d d - d d)
inline Mat4c tensor_coefficient(TensorKind kind, int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw std::invalid_argument("tensor_coefficient: index out of range");
    Mat4c c = Mat4c::Zero();
    if (kind == TensorKind::symmetric) {
        c(mu, nu) += 0.5;
        c(nu, mu) += 0.5;
        const double eta_mn = minkowski_metric()(mu, nu);
        c -= 0.25 * eta_mn * minkowski_metric().cast<Complex>();
    } else {
        c(mu, nu) += 0.5;
        c(nu, mu) -= 0.5;
    }
    return c;
}

/// Spin-label amplitude of the (mu,nu) component of a tensor state.
inline TwoParticleAmplitude tensor_state(const FourMomentum& k,
                                         const FourMomentum& p,
                                         TensorKind kind, int mu, int nu) {
    // The coefficient already carries lowered contracted indices, so it
    // contracts with the polarization matrices directly.
    const Mat4c c = tensor_coefficient(kind, mu, nu);
    const Mat3c psi = polarization(k).transpose() * c * polarization(p);
    return TwoParticleAmplitude{psi, k, p};
}

/// Doubly transversal part of Psi^{mu nu}: longitudinal components along
/// k (left index) and p (right index) removed.
inline Mat4c transversal_projection(const Mat4c& covariant,
                                    const FourMomentum& k,
                                    const FourMomentum& p) {
    const Mat4c eta = minkowski_metric().cast<Complex>();
    const Vec4 kv = k.vec(), pv = p.vec();
    const Mat4c proj_k =
        Mat4c::Identity() - (kv * (eta.real() * kv).transpose()).cast<Complex>();
    const Mat4c proj_p =
        Mat4c::Identity() - ((eta.real() * pv) * pv.transpose()).cast<Complex>();
    return proj_k * covariant * proj_p;
}

/// psi_{sigma lambda} = Psi_{mu nu} e^mu_sigma(k) e^nu_lambda(p).
/// Rejects amplitudes whose transversal part is negligible: such a Psi is
/// purely longitudinal and contracts to zero.
inline TwoParticleAmplitude covariant_to_spin(const Mat4c& covariant,
                                              const FourMomentum& k,
                                              const FourMomentum& p) {
    const Mat4c trans = transversal_projection(covariant, k, p);
    const double scale = std::max(1.0, covariant.cwiseAbs().maxCoeff());
    if (trans.cwiseAbs().maxCoeff() <= 1e-9 * scale)
        throw std::domain_error(
            "covariant_to_spin: amplitude violates transversality with no "
            "transversal content (contraction would vanish)");
    const Mat4c eta = minkowski_metric().cast<Complex>();
    const Mat3c psi =
        polarization(k).transpose() * eta * covariant * eta * polarization(p);
    return TwoParticleAmplitude{psi, k, p};
}

}  // namespace vbepr
