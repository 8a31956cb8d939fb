#pragma once

// The N, M, T observable matrices that build the trace-formula
// probabilities, the covariant action of the spin operator, and a
// brute-force spectral oracle for joint measurement probabilities.

#include <Eigen/Dense>

#include <stdexcept>

#include "vbepr/kinematics.hpp"
#include "vbepr/polarization.hpp"
#include "vbepr/spin.hpp"
#include "vbepr/states.hpp"

namespace vbepr {

struct NmtMatrices {
    Mat4c n;  ///< contraction with omega.S
    Mat4c m;  ///< contraction with (omega.S)^2
    Mat4c t;  ///< contraction with 1 - (omega.S)^2
};

/// N^{ab} = e*^a_l (w.S)_{ls} e^b_s and the companions with (w.S)^2 and
/// 1 - (w.S)^2, evaluated straight from the definitions.
inline NmtMatrices nmt_definitional(const FourMomentum& q, const Vec3& omega) {
    const PolarizationMatrix e = polarization(q);
    const Mat3c s = spin_component(omega);
    const Mat3c s2 = s * s;
    NmtMatrices out;
    out.n = e.conjugate() * s * e.transpose();
    out.m = e.conjugate() * s2 * e.transpose();
    out.t = e.conjugate() * (Mat3c::Identity() - s2) * e.transpose();
    return out;
}

/// The closed block forms of N, M, T (m = 1).
inline NmtMatrices nmt_closed_form(const FourMomentum& q, const Vec3& omega) {
    require_unit(omega, "nmt axis");
    const Vec3& qv = q.p;
    const double q0 = q.e0;
    const double wq = omega.dot(qv);
    const Vec3 cross = qv.cross(omega);
    const Complex i(0.0, 1.0);

    NmtMatrices out;

    // N: zero time-time entry, +- i (q x w) time row/column, spatial block
    // -i eps^{ijk} w^k + i [q (x) (q x w)^T - (q x w) (x) q^T] / (1+q^0).
    Mat4c n = Mat4c::Zero();
    n.block<1, 3>(0, 1) = (i * cross.transpose().cast<Complex>());
    n.block<3, 1>(1, 0) = (-i * cross.cast<Complex>());
    Mat3c spatial = Mat3c::Zero();
    spatial(0, 1) = -i * omega.z();
    spatial(1, 0) = i * omega.z();
    spatial(1, 2) = -i * omega.x();
    spatial(2, 1) = i * omega.x();
    spatial(2, 0) = -i * omega.y();
    spatial(0, 2) = i * omega.y();
    spatial += i *
               (qv * cross.transpose() - cross * qv.transpose())
                   .cast<Complex>() /
               (1.0 + q0);
    n.block<3, 3>(1, 1) = spatial;
    out.n = n;

    // M.
    Mat4c m = Mat4c::Zero();
    m(0, 0) = qv.squaredNorm() - wq * wq;
    const Vec3 m_row = qv * (q0 - wq * wq / (1.0 + q0)) - omega * wq;
    m.block<1, 3>(0, 1) = m_row.transpose().cast<Complex>();
    m.block<3, 1>(1, 0) = m_row.cast<Complex>();
    m.block<3, 3>(1, 1) =
        (Mat3::Identity() - omega * omega.transpose() -
         wq / (1.0 + q0) *
             (omega * qv.transpose() + qv * omega.transpose()) +
         (1.0 - wq * wq / ((1.0 + q0) * (1.0 + q0))) * qv * qv.transpose())
            .cast<Complex>();
    out.m = m;

    // T.
    Mat4c t = Mat4c::Zero();
    t(0, 0) = wq * wq;
    const Vec3 t_row = wq * (omega + wq * qv / (1.0 + q0));
    t.block<1, 3>(0, 1) = t_row.transpose().cast<Complex>();
    t.block<3, 1>(1, 0) = t_row.cast<Complex>();
    t.block<3, 3>(1, 1) =
        (omega * omega.transpose() +
         wq / (1.0 + q0) *
             (omega * qv.transpose() + qv * omega.transpose()) +
         wq * wq / ((1.0 + q0) * (1.0 + q0)) * qv * qv.transpose())
            .cast<Complex>();
    out.t = t;

    return out;
}

/// Covariant action of the spin component S^axis on one-particle states
/// at momentum k: -e(k) (S^axis)^T e^dag(k) eta.
inline Mat4c covariant_spin_action(const FourMomentum& k, int axis) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("covariant_spin_action: axis in {1,2,3}");
    const PolarizationMatrix e = polarization(k);
    const Mat3c s = spin_matrices()[axis - 1];
    return -(e * s.transpose() * e.adjoint() *
             minkowski_metric().cast<Complex>());
}

/// 3x3 table of joint outcome probabilities; rows are Alice's outcome,
/// columns Bob's, both ordered (+1, 0, -1).
using ProbabilityTable = Eigen::Matrix3d;

/// Index of a spin outcome in a ProbabilityTable: +1 -> 0, 0 -> 1, -1 -> 2.
inline int outcome_index(int outcome) { return 1 - outcome; }

/// Correlation sum_{s,l} s l P_{sl} of a table.
inline double table_correlation(const ProbabilityTable& table) {
    return table(0, 0) + table(2, 2) - table(0, 2) - table(2, 0);
}

/// Brute-force oracle: measure the spin-label amplitude directly with the
/// eigenprojectors of a.S (Alice) and b.S (Bob),
///   P_{sl} = |v_s(a)^dag psi conj(v_l(b))|^2 / sum |psi|^2.
inline ProbabilityTable probability_oracle(const TwoParticleAmplitude& state,
                                           const Vec3& a, const Vec3& b) {
    const double norm2 = state.norm2();
    if (!(norm2 > 0.0))
        throw std::domain_error("probability_oracle: zero-norm amplitude");
    const auto ea = spin_eigensystem(a);
    const auto eb = spin_eigensystem(b);
    ProbabilityTable table;
    for (int s = 0; s < 3; ++s)
        for (int l = 0; l < 3; ++l) {
            const Complex amp = ea[s].eigenvector.adjoint() * state.psi *
                                eb[l].eigenvector.conjugate();
            table(s, l) = std::norm(amp) / norm2;
        }
    return table;
}

}  // namespace vbepr
