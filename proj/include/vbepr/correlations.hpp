#pragma once

// Analytic joint probabilities and EPR correlation functions for the
// two-boson scalar state: general-frame trace formulas, CMF closed forms,
// ultra-relativistic and nonrelativistic limits, and extremum location in
// the momentum parameter x.

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbepr/observables.hpp"

namespace vbepr {

namespace detail {
inline double trace_eta(const Mat4c& lhs, const Mat4c& rhs) {
    const Mat4c eta = minkowski_metric().cast<Complex>();
    return (lhs * eta * rhs * eta).trace().real();
}
}  // namespace detail

/// Joint probabilities from the trace formulas, general momenta:
///   P_pm_pm = Tr{M eta M eta -+ N eta N eta} / (4 [2 + (kp)^2]), etc.
inline ProbabilityTable probabilities_general(const FourMomentum& k,
                                              const FourMomentum& p,
                                              const Vec3& a, const Vec3& b) {
    require_unit(a, "direction a");
    require_unit(b, "direction b");
    const NmtMatrices ka = nmt_definitional(k, a);
    const NmtMatrices pb = nmt_definitional(p, b);
    const double kp = minkowski_dot(k, p);
    const double denom = 2.0 + kp * kp;
    const double t_mm = detail::trace_eta(ka.m, pb.m);
    const double t_nn = detail::trace_eta(ka.n, pb.n);
    const double t_tm = detail::trace_eta(ka.t, pb.m);
    const double t_mt = detail::trace_eta(ka.m, pb.t);
    const double t_tt = detail::trace_eta(ka.t, pb.t);

    const double p_same = (t_mm - t_nn) / (4.0 * denom);
    const double p_diff = (t_mm + t_nn) / (4.0 * denom);
    const double p_0pm = t_tm / (2.0 * denom);
    const double p_pm0 = t_mt / (2.0 * denom);

    ProbabilityTable table;
    table << p_same, p_pm0, p_diff,
             p_0pm, t_tt / denom, p_0pm,
             p_diff, p_pm0, p_same;
    return table;
}

/// Correlation function from the six-term closed form (m = 1).
inline double correlation_general(const FourMomentum& k, const FourMomentum& p,
                                  const Vec3& a, const Vec3& b) {
    require_unit(a, "direction a");
    require_unit(b, "direction b");
    const double kp = minkowski_dot(k, p);
    const double ab = a.dot(b);
    const Vec3 kxp = k.p.cross(p.p);
    const double dk = 1.0 + k.e0;
    const double dp = 1.0 + p.e0;
    const double sum =
        -ab - a.dot(kxp) * b.dot(kxp) / (dk * dp) -
        (a.dot(p.p) * b.dot(k.p) - ab * p.p.dot(k.p)) +
        (a.dot(p.p) * b.dot(p.p) - p.p.squaredNorm() * ab) / dp +
        (a.dot(k.p) * b.dot(k.p) - k.p.squaredNorm() * ab) / dk +
        (k.p.dot(p.p) * a.dot(p.p) * b.dot(k.p) -
         std::pow(k.p.dot(p.p), 2) * ab) /
            (dk * dp);
    return 2.0 * sum / (2.0 + kp * kp);
}

/// Correlation via the trace form -Tr{N eta N eta} / (2 + (kp)^2).
inline double correlation_trace(const FourMomentum& k, const FourMomentum& p,
                                const Vec3& a, const Vec3& b) {
    const double kp = minkowski_dot(k, p);
    return -detail::trace_eta(nmt_definitional(k, a).n,
                              nmt_definitional(p, b).n) /
           (2.0 + kp * kp);
}

/// CMF configuration: the formulas depend only on x = |k|^2 and the three
/// dot products among a, b and the momentum direction n.
struct CmfConfig {
    double x;   ///< (|k|/m)^2 >= 0
    double ab;  ///< a . b
    double an;  ///< a . n
    double bn;  ///< b . n

    /// Gram-matrix positivity of (a, b, n); rejects unrealizable inputs.
    void validate() const {
        if (x < 0.0) throw std::invalid_argument("CmfConfig: x must be >= 0");
        if (std::abs(ab) > 1.0 + 1e-12 || std::abs(an) > 1.0 + 1e-12 ||
            std::abs(bn) > 1.0 + 1e-12)
            throw std::invalid_argument("CmfConfig: dot products exceed 1");
        Mat3 gram;
        gram << 1.0, ab, an, ab, 1.0, bn, an, bn, 1.0;
        Eigen::SelfAdjointEigenSolver<Mat3> solver(gram);
        if (solver.eigenvalues().minCoeff() < -1e-9)
            throw std::invalid_argument(
                "CmfConfig: (ab, an, bn) do not embed in the unit sphere "
                "(Gram matrix not positive semidefinite)");
    }
};

inline CmfConfig cmf_config_from_vectors(double x, const Vec3& a,
                                         const Vec3& b, const Vec3& n) {
    require_unit(a, "direction a");
    require_unit(b, "direction b");
    require_unit(n, "direction n");
    return CmfConfig{x, a.dot(b), a.dot(n), b.dot(n)};
}

/// The five CMF probability formulas with denominator 2 + (1+2x)^2.
inline ProbabilityTable cmf_probabilities(const CmfConfig& c) {
    c.validate();
    const double x = c.x;
    const double y = 1.0 + 2.0 * x;
    const double denom = 2.0 + y * y;
    const double beta = c.ab + 2.0 * x * c.an * c.bn;
    const double square_sum = c.an * c.an + c.bn * c.bn;

    const double p_same =
        (y * y - 2.0 * y * c.ab + 4.0 * x * c.an * c.bn -
         4.0 * x * (x + 1.0) * square_sum + beta * beta) /
        (4.0 * denom);
    const double p_diff =
        (y * y + 2.0 * y * c.ab - 4.0 * x * c.an * c.bn -
         4.0 * x * (x + 1.0) * square_sum + beta * beta) /
        (4.0 * denom);
    const double p_0pm =
        (1.0 + 4.0 * x * (1.0 + x) * c.an * c.an - beta * beta) /
        (2.0 * denom);
    const double p_pm0 =
        (1.0 + 4.0 * x * (1.0 + x) * c.bn * c.bn - beta * beta) /
        (2.0 * denom);
    const double p_00 = beta * beta / denom;

    ProbabilityTable table;
    table << p_same, p_pm0, p_diff,
             p_0pm, p_00, p_0pm,
             p_diff, p_pm0, p_same;
    return table;
}

/// CMF correlation 2 [-(1+2x) a.b + 2x (a.n)(b.n)] / (2 + (1+2x)^2).
inline double cmf_correlation(const CmfConfig& c) {
    const double y = 1.0 + 2.0 * c.x;
    return 2.0 * (-y * c.ab + 2.0 * c.x * c.an * c.bn) / (2.0 + y * y);
}

/// Ultra-relativistic (x -> infinity) probabilities; independent of a.b.
inline ProbabilityTable ultrarel_probabilities(double an, double bn) {
    if (std::abs(an) > 1.0 + 1e-12 || std::abs(bn) > 1.0 + 1e-12)
        throw std::invalid_argument("ultrarel_probabilities: |a.n|,|b.n| <= 1");
    const double ta = 1.0 - an * an;
    const double tb = 1.0 - bn * bn;
    const double p_same = 0.25 * ta * tb;
    const double p_0pm = 0.5 * an * an * tb;
    const double p_pm0 = 0.5 * bn * bn * ta;
    ProbabilityTable table;
    table << p_same, p_pm0, p_same,
             p_0pm, an * an * bn * bn, p_0pm,
             p_same, p_pm0, p_same;
    return table;
}

/// Nonrelativistic (x -> 0) probabilities of the spin-1 singlet.
inline ProbabilityTable nonrel_probabilities(double ab) {
    if (std::abs(ab) > 1.0 + 1e-12)
        throw std::invalid_argument("nonrel_probabilities: |a.b| <= 1");
    const double p_same = (1.0 - ab) * (1.0 - ab) / 12.0;
    const double p_diff = (1.0 + ab) * (1.0 + ab) / 12.0;
    const double p_mixed = (1.0 - ab * ab) / 6.0;
    ProbabilityTable table;
    table << p_same, p_mixed, p_diff,
             p_mixed, ab * ab / 3.0, p_mixed,
             p_diff, p_mixed, p_same;
    return table;
}

/// Correlation divided by the probability of both outcomes being nonzero.
inline double normalized_correlation(const FourMomentum& k,
                                     const FourMomentum& p, const Vec3& a,
                                     const Vec3& b) {
    const ProbabilityTable table = probabilities_general(k, p, a, b);
    const double nonzero =
        table(0, 0) + table(0, 2) + table(2, 0) + table(2, 2);
    if (nonzero <= 1e-12)
        throw std::domain_error(
            "normalized_correlation: probability of two nonzero outcomes is "
            "degenerate");
    return table_correlation(table) / nonzero;
}

/// Quantities of a CMF configuration that can be scanned over x.
enum class CmfQuantity {
    correlation,
    p_pp,
    p_pm,
    p_mp,
    p_mm,
    p_0p,
    p_p0,
    p_00,
};

inline double cmf_quantity(const CmfConfig& c, CmfQuantity which) {
    if (which == CmfQuantity::correlation) return cmf_correlation(c);
    const ProbabilityTable table = cmf_probabilities(c);
    switch (which) {
        case CmfQuantity::p_pp: return table(0, 0);
        case CmfQuantity::p_pm: return table(0, 2);
        case CmfQuantity::p_mp: return table(2, 0);
        case CmfQuantity::p_mm: return table(2, 2);
        case CmfQuantity::p_0p: return table(1, 0);
        case CmfQuantity::p_p0: return table(0, 1);
        case CmfQuantity::p_00: return table(1, 1);
        default: break;
    }
    throw std::logic_error("cmf_quantity: unknown selector");
}

struct Extremum {
    double x;
    double value;
    bool is_maximum;
};

struct ScanGrid {
    double min;
    double max;
    int count;
    bool logarithmic;

    double point(int i) const {
        const double t = static_cast<double>(i) / (count - 1);
        if (logarithmic)
            return min * std::pow(max / min, t);
        return min + (max - min) * t;
    }
};

/// Interior local extrema of f over the grid: bracketing on grid triples
/// followed by golden-section refinement to tol_x.  An empty result means
/// f is monotone over the grid.
inline std::vector<Extremum> extremum_scan(
    const std::function<double(double)>& f, const ScanGrid& grid,
    double tol_x = 1e-10) {
    if (grid.count < 3)
        throw std::invalid_argument("extremum_scan: grid needs >= 3 points");
    if (!(grid.min < grid.max))
        throw std::invalid_argument("extremum_scan: min < max required");

    std::vector<double> xs(grid.count), fs(grid.count);
    for (int i = 0; i < grid.count; ++i) {
        xs[i] = grid.point(i);
        fs[i] = f(xs[i]);
    }

    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<Extremum> out;
    for (int i = 1; i + 1 < grid.count; ++i) {
        const bool is_max = fs[i] > fs[i - 1] && fs[i] > fs[i + 1];
        const bool is_min = fs[i] < fs[i - 1] && fs[i] < fs[i + 1];
        if (!is_max && !is_min) continue;
        const double sign = is_max ? 1.0 : -1.0;
        double lo = xs[i - 1], hi = xs[i + 1];
        double x1 = hi - golden * (hi - lo);
        double x2 = lo + golden * (hi - lo);
        double f1 = sign * f(x1), f2 = sign * f(x2);
        while (hi - lo > tol_x) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = sign * f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = sign * f(x1);
            }
        }
        const double x_star = 0.5 * (lo + hi);
        out.push_back(Extremum{x_star, f(x_star), is_max});
    }
    return out;
}

/// extremum_scan specialized to a CMF quantity with x free.
inline std::vector<Extremum> extremum_scan(const CmfConfig& base,
                                           CmfQuantity which,
                                           const ScanGrid& grid,
                                           double tol_x = 1e-10) {
    return extremum_scan(
        [&](double x) {
            CmfConfig c = base;
            c.x = x;
            return cmf_quantity(c, which);
        },
        grid, tol_x);
}

}  // namespace vbepr
