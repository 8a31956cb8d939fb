#pragma once

// Derivative-free optimization helpers: a dense Nelder-Mead simplex and a
// golden-section line search.  Both are deterministic given their inputs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace vbepr {

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    bool converged;
    int iterations;
};

/// Minimizes f over R^n starting from x0.  Terminates when the simplex
/// value spread falls below f_tol or after max_iter iterations.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double step = 0.5, double f_tol = 1e-12,
    int max_iter = 4000) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    bool converged = false;
    for (; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order[0], worst = order[n],
                          second = order[n - 1];
        if (vals[worst] - vals[best] < f_tol) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + coeff * (pts[worst][d] - centroid[d]);
            return p;
        };

        const std::vector<double> refl = blend(-1.0);
        const double f_refl = f(refl);
        if (f_refl < vals[order[0]]) {
            const std::vector<double> exp_pt = blend(-2.0);
            const double f_exp = f(exp_pt);
            if (f_exp < f_refl) {
                pts[worst] = exp_pt;
                vals[worst] = f_exp;
            } else {
                pts[worst] = refl;
                vals[worst] = f_refl;
            }
            continue;
        }
        if (f_refl < vals[second]) {
            pts[worst] = refl;
            vals[worst] = f_refl;
            continue;
        }
        const std::vector<double> contr = blend(f_refl < vals[worst] ? -0.5 : 0.5);
        const double f_contr = f(contr);
        if (f_contr < std::min(f_refl, vals[worst])) {
            pts[worst] = contr;
            vals[worst] = f_contr;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t d = 0; d < n; ++d)
                pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
            vals[i] = f(pts[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (vals[i] < vals[best]) best = i;
    return NelderMeadResult{pts[best], vals[best], converged, iter};
}

/// Maximizes a unimodal f on [lo, hi] by golden-section search.
inline double golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol = 1e-12) {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace vbepr
