#pragma once

#include "common.hpp"
#include "models.hpp"
#include "rational_power.hpp"
#include "zeta.hpp"

#include <string>

namespace fracheat {

enum class kernel_method { eigensum, poisson, inverse_mellin, subordination };

inline const char* method_name(kernel_method m) {
    switch (m) {
        case kernel_method::eigensum: return "eigensum";
        case kernel_method::poisson: return "poisson";
        case kernel_method::inverse_mellin: return "inverse_mellin";
        case kernel_method::subordination: return "subordination";
    }
    return "?";
}

struct kernel_sample {
    double t = 0.0;
    std::vector<double> x, y;
    double value = 0.0;
    double error_bound = 0.0;
    kernel_method method = kernel_method::eigensum;
};

struct contour_params {
    double tau = 0.0;        // 0 = pick default n/(2r) + 1
    double half_length = 0.0; // 0 = adaptive doubling
    int node_count = 64;
    enum class rule_t { trapezoid, gauss } rule = rule_t::trapezoid;
};

// Direct spectral sum (1/vol) sum_k e^{-t lambda_k^r} cos(k . phi) with the
// cutoff grown until the integral-comparison tail bound is below tol.
inline kernel_sample heat_kernel_direct(const spectral_model& m, const rational_power& r,
                                        double t, const std::vector<double>& x,
                                        const std::vector<double>& y, double tol = 1e-12,
                                        double budget = 1e8) {
    if (!(t > 0.0)) throw invalid_argument_error("heat_kernel_direct: t > 0");
    const double vol = m.volume();
    const double rr = r.value();
    const double xi = m.shift;

    std::vector<double> phi(m.n);
    for (int j = 0; j < m.n; ++j) phi[j] = x[j] - y[j];

    // initial cutoff from solving t * lambda^r ~ log scale, then verify
    double target = tol * vol * 0.5;
    double lam = std::pow((std::log(1.0 / std::max(target, 1e-300)) + 10.0) / t, 1.0 / rr);
    double cutoff = std::max(lam, xi + 1.0);
    double tb = 0.0;
    for (int iter = 0;; ++iter) {
        tb = eigensum_tail_bound(m, cutoff, t, rr);
        if (tb <= target) break;
        if (iter > 60) throw budget_exceeded("heat_kernel_direct: tail bound stalls");
        cutoff *= 2.0;
        if (detail::lattice_point_estimate(m.radii, cutoff - xi) > budget)
            throw budget_exceeded("heat_kernel_direct: lattice budget exceeded");
    }
    if (detail::lattice_point_estimate(m.radii, cutoff - xi) > budget)
        throw budget_exceeded("heat_kernel_direct: lattice budget exceeded");

    kahan_sum acc;
    detail::for_each_lattice_point(m.radii, cutoff - xi,
        [&](const std::vector<long long>& k, double mu) {
            double lam_k = mu + xi;
            double e = -t * std::pow(lam_k, rr);
            if (e < -745.0) return;
            // eigenfunction e^{i k . theta}, so the phase is sum_j k_j phi_j
            double ph = 0.0;
            for (int j = 0; j < m.n; ++j) ph += double(k[j]) * phi[j];
            acc.add(std::exp(e) * std::cos(ph));
        });

    kernel_sample out;
    out.t = t;
    out.x = x;
    out.y = y;
    out.value = acc.value() / vol;
    out.error_bound = tb / vol + 1e-15 * std::abs(out.value);
    out.method = kernel_method::eigensum;
    return out;
}

// Theta-dual representation of the r=1 kernel; exponentially convergent as
// t -> 0 and still fine at moderate t with O(sqrt(t)) dual terms.
inline kernel_sample heat_kernel_poisson(const spectral_model& m, double t,
                                         const std::vector<double>& x,
                                         const std::vector<double>& y) {
    if (!(t > 0.0)) throw invalid_argument_error("heat_kernel_poisson: t > 0");
    double v = std::exp(-m.shift * t);
    for (int j = 0; j < m.n; ++j) {
        double phi = std::remainder(x[j] - y[j], 2.0 * pi);
        double a = m.radii[j] * m.radii[j] / (4.0 * t);
        v *= std::pow(4.0 * pi * t, -0.5) * detail::gaussian_branch_sum(a, phi);
    }
    kernel_sample out;
    out.t = t;
    out.x = x;
    out.y = y;
    out.value = v;
    out.error_bound = 1e-15 * std::abs(v) + 1e-300;
    out.method = kernel_method::poisson;
    return out;
}

// Vertical-contour inverse Mellin transform for the fractional-power kernel
// on the diagonal: P_ker + (1/2 pi i) int_{Re s = tau} t^{-s} Gamma(s)
// q_{-rs}(x,x) ds, trapezoid nodes, truncated where the integrand decays
// below 1e-3 * tol.
inline kernel_sample heat_kernel_inverse_mellin(const spectral_model& m,
                                                const rational_power& r, double t,
                                                const std::vector<double>& x,
                                                contour_params contour = {},
                                                double tol = 1e-8) {
    if (!(t > 0.0)) throw invalid_argument_error("heat_kernel_inverse_mellin: t > 0");
    const double rr = r.value();
    double tau = contour.tau > 0.0 ? contour.tau : 0.5 * m.n / rr + 1.0;
    if (!(tau > 0.5 * m.n / rr))
        throw abscissa_too_small("heat_kernel_inverse_mellin: tau <= n/(2r)");

    const double spacing = 0.25;
    auto integrand = [&](double u) -> cplx {
        cplx s{tau, u};
        cplx qz = epstein_zeta(m, rr * s).value / m.volume();
        return cpow(t, -s) * gamma(s) * qz;
    };

    // trapezoid on the symmetric line; conjugate symmetry halves the work
    kahan_sum re_acc;
    double u = 0.0;
    cplx f0 = integrand(0.0);
    re_acc.add(f0.real());
    double endpoint = std::abs(f0);
    const double endpoint_target = 1e-3 * tol * 2.0 * pi / spacing;
    const double fixed_L = contour.half_length;
    int max_nodes = std::max(contour.node_count, 64);
    int nodes = 1;
    for (u = spacing;; u += spacing) {
        cplx f = integrand(u);
        re_acc.add(2.0 * f.real()); // u and -u are conjugate
        endpoint = std::abs(f);
        nodes += 2;
        if (fixed_L > 0.0 && u >= fixed_L) {
            if (endpoint > endpoint_target)
                throw contour_too_short("heat_kernel_inverse_mellin: integrand too large at endpoint");
            break;
        }
        if (fixed_L == 0.0 && endpoint < endpoint_target && nodes >= max_nodes) break;
        if (u > 400.0)
            throw contour_too_short("heat_kernel_inverse_mellin: decay target unreachable");
    }

    kernel_sample out;
    out.t = t;
    out.x = x;
    out.y = x;
    out.value = kernel_projection_density(m) + spacing / (2.0 * pi) * re_acc.value();
    out.error_bound = endpoint * spacing / (2.0 * pi) * 10.0 + tol;
    out.method = kernel_method::inverse_mellin;
    return out;
}

} // namespace fracheat
