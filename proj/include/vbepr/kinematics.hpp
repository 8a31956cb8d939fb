#pragma once

// Minkowski algebra for massive momenta: standard boosts L_k and the
// Wigner rotations they induce.  Everything works in units m = 1, metric
// signature (+,-,-,-).

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace vbepr {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Metric tensor eta = diag(1,-1,-1,-1).
inline const Mat4& minkowski_metric() {
    static const Mat4 eta = Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return eta;
}

/// On-shell four-momentum of a unit-mass particle.  Energy is always
/// computed from the spatial part, so the on-shell constraint holds by
/// construction.
struct FourMomentum {
    double e0;
    Vec3 p;

    static FourMomentum from_spatial(const Vec3& spatial) {
        return FourMomentum{std::sqrt(1.0 + spatial.squaredNorm()), spatial};
    }

    static FourMomentum rest() { return FourMomentum{1.0, Vec3::Zero()}; }

    Vec4 vec() const { return Vec4(e0, p.x(), p.y(), p.z()); }

    double on_shell_residual() const {
        return std::abs(e0 - std::sqrt(1.0 + p.squaredNorm()));
    }
};

inline FourMomentum from_four_vector(const Vec4& v) {
    return FourMomentum{v(0), v.segment<3>(1)};
}

/// u.v = u^0 v^0 - u.v (spatial).
inline double minkowski_dot(const FourMomentum& u, const FourMomentum& v) {
    return u.e0 * v.e0 - u.p.dot(v.p);
}

/// x = (|k|/m)^2, the momentum parameter of the CMF formulas.
inline double cmf_x(const FourMomentum& k) { return k.p.squaredNorm(); }

/// Standard boost carrying the rest momentum (1,0,0,0) to k:
///   time row (k^0, k^T), spatial block  I + k (x) k^T / (1 + k^0).
inline Mat4 standard_boost(const FourMomentum& k) {
    Mat4 L;
    L(0, 0) = k.e0;
    L.block<1, 3>(0, 1) = k.p.transpose();
    L.block<3, 1>(1, 0) = k.p;
    L.block<3, 3>(1, 1) =
        Mat3::Identity() + k.p * k.p.transpose() / (1.0 + k.e0);
    return L;
}

/// Applies a Lorentz matrix to an on-shell momentum.
inline FourMomentum apply(const Mat4& lambda, const FourMomentum& k) {
    return from_four_vector(lambda * k.vec());
}

/// Residual of the pseudo-orthogonality condition L^T eta L = eta.
inline double lorentz_residual(const Mat4& lambda) {
    const Mat4& eta = minkowski_metric();
    return (lambda.transpose() * eta * lambda - eta).cwiseAbs().maxCoeff();
}

/// Wigner rotation R(Lambda,k): the spatial block of
/// L_{Lambda k}^{-1} Lambda L_k.  The full 4x4 product must be block
/// diagonal; a nontrivial time row/column signals broken input.
inline Mat3 wigner_rotation(const Mat4& lambda, const FourMomentum& k,
                            double tol = 1e-9) {
    const FourMomentum lk = apply(lambda, k);
    // L_q^{-1} = eta L_q^T eta for any Lorentz matrix.
    const Mat4& eta = minkowski_metric();
    const Mat4 inv = eta * standard_boost(lk).transpose() * eta;
    const Mat4 w = inv * lambda * standard_boost(k);
    const double off = std::max({std::abs(w(0, 0) - 1.0),
                                 w.block<1, 3>(0, 1).cwiseAbs().maxCoeff(),
                                 w.block<3, 1>(1, 0).cwiseAbs().maxCoeff()});
    if (off > tol)
        throw std::runtime_error(
            "wigner_rotation: product is not block diagonal; "
            "inputs are not a Lorentz matrix and an on-shell momentum");
    return w.block<3, 3>(1, 1);
}

/// Throws unless |omega| = 1 within 1e-9.
inline void require_unit(const Vec3& omega, const char* what = "direction") {
    if (std::abs(omega.norm() - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(what) +
                                    " must be a unit vector");
}

}  // namespace vbepr
