#pragma once

// Seeded generators for randomized property checks: unit directions,
// on-shell momenta, rotations and proper orthochronous Lorentz matrices.

#include <random>

#include "vbepr/kinematics.hpp"

namespace vbepr {

using Rng = std::mt19937_64;

inline Vec3 random_unit(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

/// On-shell momentum with |k| up to max_momentum (units of m).
inline FourMomentum random_momentum(Rng& rng, double max_momentum = 2.0) {
    std::uniform_real_distribution<double> mag(0.0, max_momentum);
    return FourMomentum::from_spatial(mag(rng) * random_unit(rng));
}

inline Mat3 random_rotation(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    return Eigen::AngleAxisd(angle(rng), random_unit(rng)).toRotationMatrix();
}

/// Proper orthochronous Lorentz matrix: rotation . boost . rotation.
inline Mat4 random_lorentz(Rng& rng, double max_momentum = 2.0) {
    auto embed = [](const Mat3& r) {
        Mat4 m = Mat4::Identity();
        m.block<3, 3>(1, 1) = r;
        return m;
    };
    return embed(random_rotation(rng)) *
           standard_boost(random_momentum(rng, max_momentum)) *
           embed(random_rotation(rng));
}

}  // namespace vbepr
