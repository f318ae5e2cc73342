#pragma once

#include "common.hpp"

#include <functional>

namespace fracheat {

template <class T>
struct quad_result {
    T value{};
    double error = 0.0;
    int evaluations = 0;
};

namespace detail {
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const cplx& x) { return std::abs(x); }
}

// Double-exponential (tanh-sinh) rule on a finite interval.  Handles endpoint
// singularities as long as the integrand is evaluable (returns finite values)
// arbitrarily close to the endpoints.  Levels are refined until the update is
// below tolerance or max_level is hit.
template <class F>
auto integrate_finite(F&& f, double a, double b, double rel_tol = 1e-12,
                      int max_level = 11) {
    using T = decltype(f(0.5 * (a + b)));
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double umax = 4.0;

    quad_result<T> out;
    T total{};
    double h = 1.0;
    T prev{};
    for (int level = 0; level <= max_level; ++level) {
        // level 0 sums all multiples of h; later levels only odd multiples of
        // the refined step, so nodes are never revisited.
        T part{};
        double step = h;
        double start = (level == 0) ? 0.0 : 0.5 * h;
        for (double u = start;; u += step) {
            bool last = u > umax;
            for (int sgn : {1, -1}) {
                if (u == 0.0 && sgn < 0) continue;
                double uu = sgn * u;
                double s = std::sinh(uu) * (pi / 2.0);
                double w = half * (pi / 2.0) * std::cosh(uu) /
                           (std::cosh(s) * std::cosh(s));
                double x = mid + half * std::tanh(s);
                if (x <= a || x >= b) continue; // tanh saturated
                if (w < 1e-290) continue;
                part += f(x) * w;
                ++out.evaluations;
            }
            if (last) break;
        }
        if (level == 0) total = part * h;
        else total = total * 0.5 + part * (0.5 * h);
        if (level >= 2) {
            double diff = detail::abs_of(total - prev);
            double scale = std::max(detail::abs_of(total), 1e-300);
            out.error = diff;
            if (diff <= rel_tol * scale) {
                out.value = total;
                return out;
            }
        }
        prev = total;
        if (level > 0) h *= 0.5;
    }
    out.value = total;
    return out;
}

// Exp-sinh rule on [a, infinity) for integrands with (at least) exponential
// decay.  Same refinement contract as integrate_finite.
template <class F>
auto integrate_semi_infinite(F&& f, double a, double rel_tol = 1e-12,
                             int max_level = 11) {
    using T = decltype(f(a + 1.0));
    const double umax = 4.2;
    quad_result<T> out;
    T total{};
    double h = 1.0;
    T prev{};
    for (int level = 0; level <= max_level; ++level) {
        T part{};
        double step = h;
        double start = (level == 0) ? 0.0 : 0.5 * h;
        for (double u = start;; u += step) {
            bool last = u > umax;
            for (int sgn : {1, -1}) {
                if (u == 0.0 && sgn < 0) continue;
                double uu = sgn * u;
                double e = std::exp((pi / 2.0) * std::sinh(uu));
                double w = (pi / 2.0) * std::cosh(uu) * e;
                double x = a + e;
                if (!std::isfinite(x) || x <= a || !std::isfinite(w)) continue;
                if (w < 1e-290) continue;
                part += f(x) * w;
                ++out.evaluations;
            }
            if (last) break;
        }
        if (level == 0) total = part * h;
        else total = total * 0.5 + part * (0.5 * h);
        if (level >= 2) {
            double diff = detail::abs_of(total - prev);
            double scale = std::max(detail::abs_of(total), 1e-300);
            out.error = diff;
            if (diff <= rel_tol * scale) {
                out.value = total;
                return out;
            }
        }
        prev = total;
        if (level > 0) h *= 0.5;
    }
    out.value = total;
    return out;
}

} // namespace fracheat
