#pragma once

// Spin-1 generator matrices, the intertwiner V with D(R) = V R V^dag, and
// the eigensystem of direction spin components.  Spin labels are ordered
// (+1, 0, -1) everywhere, matching the rows of S^3.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <utility>

#include "vbepr/kinematics.hpp"

namespace vbepr {

using Complex = std::complex<double>;
using Mat3c = Eigen::Matrix3cd;
using Vec3c = Eigen::Vector3cd;

inline const Mat3c& spin_x() {
    static const Mat3c s = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Mat3c m;
        m << 0, r, 0, r, 0, r, 0, r, 0;
        return m;
    }();
    return s;
}

inline const Mat3c& spin_y() {
    static const Mat3c s = [] {
        const Complex ir(0.0, 1.0 / std::sqrt(2.0));
        Mat3c m;
        m << 0, -ir, 0, ir, 0, -ir, 0, ir, 0;
        return m;
    }();
    return s;
}

inline const Mat3c& spin_z() {
    static const Mat3c s = [] {
        Mat3c m = Mat3c::Zero();
        m(0, 0) = 1.0;
        m(2, 2) = -1.0;
        return m;
    }();
    return s;
}

inline std::array<Mat3c, 3> spin_matrices() {
    return {spin_x(), spin_y(), spin_z()};
}

/// The unitary intertwiner between the vector (Cartesian) and spin-label
/// bases of the spin-1 representation.
inline const Mat3c& intertwiner() {
    static const Mat3c v = [] {
        const double r = 1.0 / std::sqrt(2.0);
        const Complex i(0.0, 1.0);
        Mat3c m;
        m << -r, i * r, 0, 0, 0, 1, r, i * r, 0;
        return m;
    }();
    return v;
}

/// V V^T: the antidiagonal matrix with entries (-1, 1, -1).
inline const Mat3c& intertwiner_vvt() {
    static const Mat3c m = [] {
        Mat3c a = Mat3c::Zero();
        a(0, 2) = -1.0;
        a(1, 1) = 1.0;
        a(2, 0) = -1.0;
        return a;
    }();
    return m;
}

/// Spin-1 representation matrix D(R) = V R V^dag of a rotation R.
inline Mat3c d_matrix(const Mat3& rotation) {
    const Mat3c& v = intertwiner();
    return v * rotation.cast<Complex>() * v.adjoint();
}

/// omega . S for a unit direction omega.
inline Mat3c spin_component(const Vec3& omega) {
    require_unit(omega, "spin_component axis");
    return omega.x() * spin_x() + omega.y() * spin_y() + omega.z() * spin_z();
}

struct SpinEigenpair {
    double eigenvalue;
    Vec3c eigenvector;
};

/// Eigen-decomposition of omega . S, ordered (+1, 0, -1).  The phase of
/// each eigenvector is fixed by making its largest-magnitude component
/// real positive (ties broken by index order).
inline std::array<SpinEigenpair, 3> spin_eigensystem(const Vec3& omega) {
    const Mat3c s = spin_component(omega);
    Eigen::SelfAdjointEigenSolver<Mat3c> solver(s);
    std::array<SpinEigenpair, 3> out;
    // Solver returns ascending eigenvalues; we want (+1, 0, -1).
    for (int j = 0; j < 3; ++j) {
        Vec3c v = solver.eigenvectors().col(2 - j);
        int imax = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
        const Complex c = v(imax);
        if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
        out[j] = SpinEigenpair{solver.eigenvalues()(2 - j), v};
    }
    return out;
}

}  // namespace vbepr
