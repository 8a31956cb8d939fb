#pragma once

// Polarization amplitudes e^mu_sigma(k) of a massive vector boson and the
// Weinberg covariance condition.

#include <Eigen/Dense>

#include "vbepr/kinematics.hpp"
#include "vbepr/spin.hpp"

namespace vbepr {

/// 4x3 complex matrix; row mu in {0..3}, column sigma in (+1, 0, -1).
using PolarizationMatrix = Eigen::Matrix<Complex, 4, 3>;

/// Rest-frame amplitude: zero time row over V^T.
inline const PolarizationMatrix& polarization_rest() {
    static const PolarizationMatrix e = [] {
        PolarizationMatrix m = PolarizationMatrix::Zero();
        m.block<3, 3>(1, 0) = intertwiner().transpose();
        return m;
    }();
    return e;
}

/// e(k) = L_k e(k~) in closed form: time row k^T V^T, spatial block
/// [I + k (x) k^T / (1 + k^0)] V^T.
inline PolarizationMatrix polarization(const FourMomentum& k) {
    const Mat3c vt = intertwiner().transpose();
    PolarizationMatrix e;
    e.block<1, 3>(0, 0) = k.p.transpose().cast<Complex>() * vt;
    e.block<3, 3>(1, 0) =
        (Mat3::Identity() + k.p * k.p.transpose() / (1.0 + k.e0))
            .cast<Complex>() *
        vt;
    return e;
}

/// Max-norm residual of the Weinberg condition
///   e(Lambda k) = Lambda e(k) D(R(Lambda,k))^T.
inline double weinberg_residual(const Mat4& lambda, const FourMomentum& k) {
    const Mat3c d = d_matrix(wigner_rotation(lambda, k));
    const PolarizationMatrix lhs = polarization(apply(lambda, k));
    const PolarizationMatrix rhs =
        lambda.cast<Complex>() * polarization(k) * d.transpose();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace vbepr
