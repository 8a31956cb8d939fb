#pragma once

// Bell-type inequality left-hand sides for the boson pair in the CMF and
// a seeded multi-start maximizer locating the strongest violation over
// measurement directions (and momentum, when free).

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "vbepr/correlations.hpp"
#include "vbepr/optim.hpp"
#include "vbepr/random.hpp"

namespace vbepr {

enum class Inequality { chsh, mermin, weighted };

inline const char* inequality_name(Inequality id) {
    switch (id) {
        case Inequality::chsh: return "chsh";
        case Inequality::mermin: return "mermin";
        case Inequality::weighted: return "weighted";
    }
    return "?";
}

/// Measurement configuration: directions a, b, c, d (d only used by CHSH),
/// momentum direction n, and the momentum parameter x.
struct BellConfig {
    Vec3 a, b, c, d;
    Vec3 n;
    double x;

    CmfConfig pair(const Vec3& u, const Vec3& v) const {
        return CmfConfig{x, u.dot(v), u.dot(n), v.dot(n)};
    }
};

/// Normalized relativistic CHSH left-hand side (bound 1):
/// (|C_ab - C_ad| + |C_cb + C_cd|) / 2.
inline double chsh_lhs(const BellConfig& cfg) {
    const double c_ab = cmf_correlation(cfg.pair(cfg.a, cfg.b));
    const double c_ad = cmf_correlation(cfg.pair(cfg.a, cfg.d));
    const double c_cb = cmf_correlation(cfg.pair(cfg.c, cfg.b));
    const double c_cd = cmf_correlation(cfg.pair(cfg.c, cfg.d));
    return 0.5 * (std::abs(c_ab - c_ad) + std::abs(c_cb + c_cd));
}

/// Mermin spin-1 inequality left-hand side C_ab + C_bc + C_ca (bound 1).
inline double mermin_lhs(const BellConfig& cfg) {
    return cmf_correlation(cfg.pair(cfg.a, cfg.b)) +
           cmf_correlation(cfg.pair(cfg.b, cfg.c)) +
           cmf_correlation(cfg.pair(cfg.c, cfg.a));
}

/// Mermin's second inequality (bound 1): the three correlations plus the
/// squared-bracket term from the mean absolute outcome difference,
///   2/D { -(1+2x)(ab+bc+ca) + 2x(an bn + bn cn + cn an)
///         + 1/2 [ab + 2x an bn]^2 }.
inline double weighted_lhs(const BellConfig& cfg) {
    const double x = cfg.x;
    const double y = 1.0 + 2.0 * x;
    const double ab = cfg.a.dot(cfg.b), bc = cfg.b.dot(cfg.c),
                 ca = cfg.c.dot(cfg.a);
    const double an = cfg.a.dot(cfg.n), bn = cfg.b.dot(cfg.n),
                 cn = cfg.c.dot(cfg.n);
    const double beta = ab + 2.0 * x * an * bn;
    return 2.0 *
           (-y * (ab + bc + ca) + 2.0 * x * (an * bn + bn * cn + cn * an) +
            0.5 * beta * beta) /
           (2.0 + y * y);
}

/// Coplanar specialization of the weighted inequality with
/// a.b = cos(pi - 2 theta), a.c = b.c = cos(pi/2 + theta), all
/// perpendicular to n:
///   [2(1+2x)(2 sin(theta) + cos(2 theta)) + cos^2(2 theta)] / (2+(1+2x)^2).
inline double coplanar_lhs(double theta, double x) {
    const double y = 1.0 + 2.0 * x;
    const double c2 = std::cos(2.0 * theta);
    return (2.0 * y * (2.0 * std::sin(theta) + c2) + c2 * c2) /
           (2.0 + y * y);
}

/// Explicit directions realizing the coplanar parametrization:
/// a.b = cos(pi - 2 theta), a.c = b.c = cos(pi/2 + theta), all
/// perpendicular to n = z.  theta = pi/6 gives a + b + c = 0.
inline BellConfig coplanar_config(double theta, double x) {
    BellConfig cfg;
    cfg.n = Vec3::UnitZ();
    cfg.a = Vec3(-std::cos(theta), std::sin(theta), 0.0);
    cfg.b = Vec3(std::cos(theta), std::sin(theta), 0.0);
    cfg.c = Vec3(0.0, -1.0, 0.0);
    cfg.d = cfg.c;
    cfg.x = x;
    return cfg;
}

struct BellReport {
    Inequality id;
    double lhs;
    double bound;
    bool violated;
    BellConfig argmax;
    int starts;
    bool converged;
};

namespace detail {

inline Vec3 from_angles(double polar, double azimuth) {
    return Vec3(std::sin(polar) * std::cos(azimuth),
                std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

inline BellConfig decode_bell_point(Inequality id,
                                    const std::vector<double>& point,
                                    std::optional<double> fixed_x) {
    const int dirs = (id == Inequality::chsh) ? 4 : 3;
    BellConfig cfg;
    cfg.n = Vec3::UnitZ();
    cfg.a = from_angles(point[0], point[1]);
    cfg.b = from_angles(point[2], point[3]);
    cfg.c = from_angles(point[4], point[5]);
    cfg.d = (dirs == 4) ? from_angles(point[6], point[7]) : cfg.c;
    cfg.x = fixed_x ? *fixed_x
                    : std::pow(10.0, point[2 * dirs]);
    return cfg;
}

inline double bell_eval(Inequality id, const BellConfig& cfg) {
    switch (id) {
        case Inequality::chsh: return chsh_lhs(cfg);
        case Inequality::mermin: return mermin_lhs(cfg);
        case Inequality::weighted: return weighted_lhs(cfg);
    }
    return 0.0;
}

}  // namespace detail

/// Multi-start Nelder-Mead maximization of a Bell LHS over the spherical
/// angles of the free directions, with n fixed to the z axis (allowed by
/// rotational invariance) and x searched in log space over [1e-6, 1e4]
/// when free.  Deterministic for a fixed seed; the thread count only
/// distributes the precomputed starts and never changes the result.
inline BellReport maximize_violation(Inequality id,
                                     std::optional<double> fixed_x,
                                     std::uint64_t seed, int starts = 64,
                                     int threads = 1) {
    const int dirs = (id == Inequality::chsh) ? 4 : 3;
    const std::size_t dim =
        2 * static_cast<std::size_t>(dirs) + (fixed_x ? 0 : 1);

    // All start points come from one seeded stream, so the outcome is
    // independent of how the work is split across threads.
    std::vector<std::vector<double>> start_points(starts);
    {
        Rng rng(seed);
        std::uniform_real_distribution<double> polar(0.0, M_PI);
        std::uniform_real_distribution<double> azimuth(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> log_x(-6.0, 4.0);
        for (auto& point : start_points) {
            point.resize(dim);
            for (int i = 0; i < dirs; ++i) {
                point[2 * i] = polar(rng);
                point[2 * i + 1] = azimuth(rng);
            }
            if (!fixed_x) point[2 * dirs] = log_x(rng);
        }
    }

    const auto objective = [&](const std::vector<double>& point) {
        return -detail::bell_eval(id,
                                  detail::decode_bell_point(id, point, fixed_x));
    };

    std::vector<NelderMeadResult> results(starts);
    const auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            results[i] = nelder_mead(objective, start_points[i], 0.5, 1e-12);
    };
    if (threads <= 1) {
        run_range(0, starts);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (starts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(starts, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Max by LHS; ties broken by lexicographic parameter vector so the
    // merge is order-independent.
    int best = 0;
    for (int i = 1; i < starts; ++i) {
        if (results[i].value < results[best].value ||
            (results[i].value == results[best].value &&
             results[i].x < results[best].x))
            best = i;
    }
    NelderMeadResult top = results[best];

    // Golden-section polish on x at the best angles.
    if (!fixed_x) {
        const auto lhs_of_log_x = [&](double t) {
            std::vector<double> point = top.x;
            point[2 * dirs] = t;
            return -objective(point);
        };
        const double t_star = golden_section_max(lhs_of_log_x, -6.0, 4.0);
        if (lhs_of_log_x(t_star) >= -top.value) {
            top.x[2 * dirs] = t_star;
            top.value = -lhs_of_log_x(t_star);
        }
    }

    BellReport report;
    report.id = id;
    report.bound = 1.0;
    report.lhs = -top.value;
    report.violated = report.lhs > report.bound + 1e-12;
    report.argmax = detail::decode_bell_point(id, top.x, fixed_x);
    report.starts = starts;
    report.converged = top.converged;
    return report;
}

}  // namespace vbepr
