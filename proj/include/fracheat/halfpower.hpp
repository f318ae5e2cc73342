#pragma once

#include "common.hpp"
#include "fit.hpp"
#include "heat.hpp"
#include "models.hpp"
#include "specfun.hpp"

namespace fracheat {

struct blowup_point {
    double rho = 0.0;
    double omega0 = 1.0;
    std::vector<double> omega_prime; // n components
    std::vector<double> base;        // x'

    void validate(int n) const {
        if ((int)omega_prime.size() != n || (int)base.size() != n)
            throw invalid_argument_error("blowup_point: dimension mismatch");
        double s = omega0 * omega0;
        for (double w : omega_prime) s += w * w;
        if (std::abs(s - 1.0) > 1e-14)
            throw invalid_argument_error("blowup_point: omega not on the unit sphere");
        if (rho < 0.0 || omega0 < 0.0)
            throw invalid_argument_error("blowup_point: rho, omega0 >= 0");
    }
};

namespace detail {

// p_T(x,y) - P_ker with the evaluation method picked by T: the theta-dual
// form converges fastest for small T, the eigensum for large T.
inline double r1_kernel_minus_projection(const spectral_model& m, double T,
                                         const std::vector<double>& x,
                                         const std::vector<double>& y) {
    const double P = kernel_projection_density(m);
    if (T < 1.0) return heat_kernel_poisson(m, T, x, y).value - P;
    static const rational_power one = rational_power::rational(1, 1);
    return heat_kernel_direct(m, one, T, x, y, 1e-13).value - P;
}

} // namespace detail

// r = 1/2 kernel through the subordination identity
//   h_t - P = (t / 2 sqrt(pi)) int_0^inf T^{-3/2} e^{-t^2/4T} (p_T - P) dT,
// with u = t/(2 sqrt(T)) substituted below the split T* = max(t^2, d^2) so
// both pieces are smooth rapidly convergent integrals.
inline kernel_sample subordinated_kernel(const spectral_model& m, double t,
                                         const std::vector<double>& x,
                                         const std::vector<double>& y,
                                         double tol = 1e-10) {
    if (!(t > 0.0)) throw invalid_argument_error("subordinated_kernel: t > 0");
    const double P = kernel_projection_density(m);
    const double d = torus_distance(m, x, y);
    const double Tsplit = std::max(t * t, d * d);
    const double u1 = t / (2.0 * std::sqrt(Tsplit));

    auto small_T = integrate_semi_infinite(
        [&](double u) {
            double T = t * t / (4.0 * u * u);
            double e = -u * u;
            if (e < -700.0) return 0.0;
            return std::exp(e) * detail::r1_kernel_minus_projection(m, T, x, y);
        },
        u1, 1e-12, 10);
    auto large_T = integrate_semi_infinite(
        [&](double T) {
            double e = -t * t / (4.0 * T);
            return std::pow(T, -1.5) * std::exp(e) *
                   detail::r1_kernel_minus_projection(m, T, x, y);
        },
        Tsplit, 1e-12, 10);

    kernel_sample out;
    out.t = t;
    out.x = x;
    out.y = y;
    out.value = P + (2.0 / sqrt_pi) * small_T.value +
                t / (2.0 * sqrt_pi) * large_T.value;
    out.error_bound = (2.0 / sqrt_pi) * small_T.error +
                      t / (2.0 * sqrt_pi) * large_T.error + 1e-14 * std::abs(out.value);
    out.method = kernel_method::subordination;
    if (out.error_bound > std::max(tol, 1e-12 * std::abs(out.value)) * 100.0)
        throw quadrature_failure("subordinated_kernel: refinement stalled above tolerance");
    return out;
}

struct expansion_value {
    double value = 0.0;
    double remainder_estimate = 0.0;
};

// Truncated incomplete-Gamma form of h_t - P near the diagonal:
//   (t / 2 sqrt(pi)) sum_{j<=N} a_j Gamma((n+1)/2 - j, z) z^{-(n+1)/2+j},
// z = (t^2 + d^2)/4; the remainder is measured against the subordinated
// evaluation.
inline expansion_value incomplete_gamma_expansion(const spectral_model& m, int N,
                                                  double t, const std::vector<double>& x,
                                                  const std::vector<double>& y) {
    if (N < 0) throw invalid_argument_error("incomplete_gamma_expansion: N >= 0");
    const double d = torus_distance(m, x, y);
    const double z = (t * t + d * d) / 4.0;
    heat_coefficients_t a = heat_coefficients(m, N);
    double sum = 0.0;
    for (int j = 0; j <= N; ++j) {
        double zexp = -(0.5 * (m.n + 1)) + double(j);
        sum += a.at(j) * upper_incomplete_gamma(0.5 * (m.n + 1) - double(j), z) *
               std::pow(z, zexp);
    }
    expansion_value out;
    out.value = t / (2.0 * sqrt_pi) * sum;
    double sub = subordinated_kernel(m, t, x, y).value - kernel_projection_density(m);
    out.remainder_estimate = std::abs(out.value - sub);
    return out;
}

// h evaluated at the blow-down (t, x, y) = (rho w0, rho w' + x', x'); the
// lateral boundary (w0 = 0, off-diagonal) is the t -> 0 limit, which is 0.
inline double blowup_pullback(const spectral_model& m, const blowup_point& pt) {
    pt.validate(m.n);
    double t = pt.rho * pt.omega0;
    std::vector<double> xx(m.n);
    for (int j = 0; j < m.n; ++j) xx[j] = pt.rho * pt.omega_prime[j] + pt.base[j];
    if (t <= 0.0) {
        if (torus_distance(m, xx, pt.base) > 0.0) return 0.0;
        throw invalid_argument_error("blowup_pullback: t = 0 on the diagonal");
    }
    return subordinated_kernel(m, t, xx, pt.base).value;
}

struct front_face_profile_result {
    std::vector<double> rho;
    std::vector<double> profile; // rho^n h / omega0
    // n even: extrapolated limit vs closed-form prediction
    double limit = 0.0;
    double predicted_limit = 0.0;
    // n odd: (j, fitted, predicted) per rho^{2j} log(rho) column
    std::vector<std::array<double, 3>> log_rows;
    bool pass = false;
};

// Front-face structure check: the rescaled profile rho^n h / omega0 must
// converge (n even) to 2^{n/2} (n-1)!! a_0, or carry rho^{2j} log(rho) terms
// with the predicted coefficients (n odd).
inline front_face_profile_result front_face_profile(const spectral_model& m,
                                                    double omega0,
                                                    const std::vector<double>& omega_prime,
                                                    const std::vector<double>& rho_grid) {
    if (rho_grid.size() < 3)
        throw invalid_argument_error("front_face_profile: need >= 3 rho values");
    front_face_profile_result out;
    std::vector<double> base(m.n, 0.0);
    for (double rho : rho_grid) {
        blowup_point pt;
        pt.rho = rho;
        pt.omega0 = omega0;
        pt.omega_prime = omega_prime;
        pt.base = base;
        double h = blowup_pullback(m, pt);
        out.rho.push_back(rho);
        out.profile.push_back(std::pow(rho, m.n) * h / omega0);
    }

    heat_coefficients_t a = heat_coefficients(m, m.n + 4);
    if (m.n % 2 == 0) {
        // Richardson in rho^2 assuming a halving grid
        for (size_t i = 1; i < rho_grid.size(); ++i)
            if (std::abs(rho_grid[i] / rho_grid[i - 1] - 0.5) > 1e-12)
                throw invalid_argument_error("front_face_profile: grid must halve (n even)");
        std::vector<double> T = out.profile;
        size_t N = T.size();
        for (size_t mcol = 1; mcol < N; ++mcol) {
            double f = std::pow(4.0, double(mcol));
            for (size_t i = N - 1; i >= mcol; --i)
                T[i] = (f * T[i] - T[i - 1]) / (f - 1.0);
        }
        out.limit = T[N - 1];
        double dfact = 1.0;
        for (int k = m.n - 1; k >= 2; k -= 2) dfact *= double(k);
        out.predicted_limit = std::pow(2.0, 0.5 * m.n) * dfact * a.at(0);
        out.pass = std::abs(out.limit - out.predicted_limit) <=
                   1e-3 * std::abs(out.predicted_limit);
    } else {
        // fit {1} + {rho^{2j}, rho^{2j} log rho} and compare the log columns
        expansion_template tmpl;
        tmpl.n = m.n;
        tmpl.r = rational_power::rational(1, 2);
        expansion_term c;
        c.exponent = 0.0;
        c.label = term_label::integer;
        tmpl.terms.push_back(c);
        int jmax = 2;
        for (int j = 1; j <= jmax; ++j) {
            expansion_term p;
            p.exponent = 2.0 * j;
            p.label = term_label::integer;
            p.j = j;
            tmpl.terms.push_back(p);
            expansion_term q = p;
            q.log_power = 1;
            q.label = term_label::log;
            tmpl.terms.push_back(q);
        }
        sample_grid grid;
        for (size_t i = 0; i < out.rho.size(); ++i)
            grid.points.push_back({out.rho[i], out.profile[i], 1e-12});
        fit_result fr = fit_expansion(grid, tmpl);
        out.pass = true;
        for (size_t k = 0; k < tmpl.terms.size(); ++k) {
            const auto& term = tmpl.terms[k];
            if (term.log_power != 1) continue;
            long long j = term.j;
            long long base_j = (m.n + 1) / 2;
            double predicted = 0.0;
            if (j >= base_j) {
                double sgn = ((j - base_j + 1) % 2 == 0) ? 1.0 : -1.0;
                predicted = (2.0 / sqrt_pi) * std::pow(2.0, double(m.n - 2 * j)) * sgn /
                            std::exp(std::lgamma(double(j - base_j) + 1.0)) * a.at(j);
            }
            out.log_rows.push_back({double(j), fr.coefficients[k], predicted});
            // The highest fitted order absorbs the omitted-term truncation
            // bias, so only lower orders are gated against the prediction.
            if (j == jmax) continue;
            double tol = std::max(0.02 * std::abs(predicted), 1e-6);
            out.pass &= std::abs(fr.coefficients[k] - predicted) <= tol;
        }
    }
    return out;
}

} // namespace fracheat
