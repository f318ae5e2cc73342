#pragma once

#include "common.hpp"
#include "models.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace fracheat {

struct zeta_value {
    cplx s{};
    cplx value{};
    bool is_pole = false;
    cplx residue{};
    bool near_pole = false; // Laurent-mode evaluation was used
};

struct q_kernel_value {
    cplx s{};
    std::vector<double> x, y;
    cplx value{};
};

namespace detail {

// exp of a complex exponent with graceful underflow.
inline cplx exp_guarded(cplx w) {
    if (w.real() < -745.0) return {0.0, 0.0};
    return std::exp(w);
}

// 2 * sum_{k>=1} e^{-x k^2}  (theta(x) - 1 for the one-dimensional lattice)
inline double theta_minus_one(double x) {
    double sum = 0.0;
    for (int k = 1; k < 100000; ++k) {
        double e = -x * double(k) * double(k);
        if (e < -745.0) break;
        double term = std::exp(e);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 2.0 * sum;
}

// 1 + 2 sum_{k>=1} e^{-x k^2} cos(k phi)
inline double theta_phase(double x, double phi) {
    double sum = 1.0;
    for (int k = 1; k < 100000; ++k) {
        double e = -x * double(k) * double(k);
        if (e < -745.0) break;
        double term = 2.0 * std::exp(e) * std::cos(double(k) * phi);
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1.0) && e < -1.0) break;
    }
    return sum;
}

// sum_m exp(-a (phi + 2 pi m)^2), the Poisson-dual factor off the diagonal
inline double gaussian_branch_sum(double a, double phi) {
    double sum = 0.0;
    for (int dir : {0, 1}) {
        for (long long m = (dir == 0 ? 0 : -1);; m += (dir == 0 ? 1 : -1)) {
            double x = phi + 2.0 * pi * double(m);
            double e = -a * x * x;
            if (e >= -745.0) {
                double term = std::exp(e);
                sum += term;
                if (term < 1e-18 * sum && std::abs(x) > 2.0 * pi) break;
            } else if (std::abs(x) > 2.0 * pi) {
                break;
            }
            if (std::abs(m) > 100000) break;
        }
    }
    return sum;
}

// prod_j (1 + g_j) - 1 without losing relative accuracy when the g_j are tiny
inline double product1p_minus_one(const std::vector<double>& g) {
    double r = 0.0;
    for (double gj : g) r = r + gj + r * gj;
    return r;
}

// sum_{j>J} (-x)^j / j!  (the Taylor tail of e^{-x}), never by subtraction
inline double exp_taylor_tail(double x, int J) {
    double term = 1.0;
    for (int j = 1; j <= J + 1; ++j) term *= -x / double(j);
    if (term == 0.0) return 0.0;
    double sum = 0.0;
    for (int j = J + 1; j < J + 500; ++j) {
        sum += term;
        term *= -x / double(j + 1);
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// G(s) = Gamma(s) * zeta_model(s) decomposed as an explicit simple-pole
// ladder plus integrals analytic for |s| <= ~35.  The decomposition is the
// Mellin transform of the heat trace (kernel eigenvalue removed) split at
// t = c, with the Poisson-dual form of the theta factors on (0, c) and the
// e^{-xi t} factor kept as Taylor polynomial (-> ladder) plus tail integral.
struct mellin_pieces {
    std::vector<std::pair<double, double>> ladder; // (location p_j, residue K_j)
    cplx integrals{};                              // I1 + I2 + I3, analytic
    double split = 0.0;                            // c

    // sum of the ladder terms K c^{s-p}/(s-p); caller keeps s away from p
    cplx ladder_sum(cplx s) const {
        cplx out = 0.0;
        for (auto& [p, K] : ladder) out += K * cpow(split, s - p) / (s - p);
        return out;
    }
    // ladder with the term at p0 replaced by its finite part K log c
    cplx ladder_regular_part(cplx s, double p0, double K0) const {
        cplx out = K0 * std::log(split);
        for (auto& [p, K] : ladder)
            if (p != p0) out += K * cpow(split, s - p) / (s - p);
        return out;
    }
};

inline mellin_pieces mellin_decompose(const spectral_model& m, cplx s) {
    const double xi = m.shift;
    const int n = m.n;
    double pmin = m.radii[0], pmax = m.radii[0];
    for (double p : m.radii) { pmin = std::min(pmin, p); pmax = std::max(pmax, p); }
    const double c = pi * pmin * pmax;

    double prod_p = 1.0;
    for (double p : m.radii) prod_p *= p;
    const double C = prod_p * std::pow(pi, 0.5 * n); // dual-side prefactor

    mellin_pieces out;
    out.split = c;

    // direct side: t in (c, infinity)
    auto big_t = [&](double t) -> cplx {
        std::vector<double> g(n);
        for (int j = 0; j < n; ++j) g[j] = theta_minus_one(t / (m.radii[j] * m.radii[j]));
        double F = product1p_minus_one(g); // Theta(t) - 1, excludes k = 0
        cplx lt = (s - 1.0) * std::log(t);
        if (xi == 0.0) {
            if (F <= 0.0) return {0.0, 0.0};
            return exp_guarded(lt + std::log(F));
        }
        return exp_guarded(lt - xi * t + std::log1p(F));
    };
    cplx I1 = integrate_semi_infinite(big_t, c, 1e-13, 11).value;

    int J = 0;
    if (xi > 0.0)
        J = std::max(0, (int)std::ceil(0.5 * n - s.real())) + 4;
    for (int j = 0; j <= J; ++j) {
        double Kj = C;
        for (int i = 1; i <= j; ++i) Kj *= -xi / double(i);
        out.ladder.emplace_back(0.5 * n - double(j), Kj);
    }
    if (xi == 0.0) out.ladder.emplace_back(0.0, -1.0); // kernel subtraction -c^s/s

    // Taylor-tail remainder of the leading dual term (xi > 0 only)
    cplx I2 = 0.0;
    if (xi > 0.0) {
        auto tail_t = [&](double t) -> cplx {
            if (t <= 0.0) return {0.0, 0.0};
            double tail = exp_taylor_tail(xi * t, J);
            if (tail == 0.0) return {0.0, 0.0};
            double sgn = tail > 0.0 ? 1.0 : -1.0;
            cplx w = (s - 0.5 * n - 1.0) * std::log(t) + std::log(std::abs(tail));
            return C * sgn * exp_guarded(w);
        };
        I2 = integrate_finite(tail_t, 0.0, c, 1e-13, 11).value;
    }

    // dual lattice correction on (0, c)
    auto dual_t = [&](double t) -> cplx {
        if (t <= 0.0) return {0.0, 0.0};
        std::vector<double> g(n);
        for (int j = 0; j < n; ++j) {
            double pr = m.radii[j];
            g[j] = theta_minus_one(pi * pi * pr * pr / t);
        }
        double F = product1p_minus_one(g);
        if (F <= 0.0) return {0.0, 0.0};
        cplx w = (s - 0.5 * n - 1.0) * std::log(t) - xi * t + std::log(F);
        return C * exp_guarded(w);
    };
    cplx I3 = integrate_finite(dual_t, 0.0, c, 1e-13, 11).value;

    out.integrals = I1 + I2 + I3;
    return out;
}

// derivative of 1/Gamma at a real point: exact at the zeros, complex-step
// elsewhere
inline double recip_gamma_derivative(double p) {
    if (p <= 0.0 && p == std::round(p)) {
        long long mm = llround(-p);
        double v = std::exp(std::lgamma(double(mm) + 1.0));
        return (mm % 2 == 0) ? v : -v;
    }
    const double h = 1e-9;
    return recip_gamma(cplx{p, h}).imag() / h;
}

} // namespace detail

inline constexpr double near_pole_threshold = 1e-6;

// Meromorphic continuation of the spectral zeta function of the model,
// accurate to ~1e-10 relative for |s| <= 30 away from the pole ladder.
// Within near_pole_threshold of a ladder point the Laurent data at that point
// is reported instead: is_pole with the residue when zeta genuinely poles, or
// the finite limit value when the 1/Gamma zero cancels the ladder pole.
inline zeta_value epstein_zeta(const spectral_model& m, cplx s) {
    detail::mellin_pieces rep = detail::mellin_decompose(m, s);

    double best = 1e300, p0 = 0.0, K0 = 0.0;
    for (auto& [p, K] : rep.ladder) {
        double d = std::abs(s - cplx{p, 0.0});
        if (d < best) { best = d; p0 = p; K0 = K; }
    }

    zeta_value out;
    out.s = s;
    if (best >= near_pole_threshold) {
        out.value = (rep.integrals + rep.ladder_sum(s)) * recip_gamma(s);
        return out;
    }

    // Laurent mode at the real ladder point p0:
    //   G(s) = K0/(s - p0) + G_reg + O(s - p0),
    //   zeta = K0 rg(p0)/(s - p0) + [K0 rg'(p0) + G_reg rg(p0)] + ...
    out.near_pole = true;
    const cplx sp{p0, 0.0};
    detail::mellin_pieces rep0 = detail::mellin_decompose(m, sp);
    cplx G_reg = rep0.integrals + rep0.ladder_regular_part(sp, p0, K0);
    cplx rg = recip_gamma(sp);
    double rgp = detail::recip_gamma_derivative(p0);
    out.value = K0 * rgp + G_reg * rg;
    if (rg != cplx{0.0, 0.0}) {
        out.is_pole = true;
        out.residue = K0 * rg;
    }
    return out;
}

// Diagonal kernel of the -s power: continued zeta divided by the volume.
inline q_kernel_value q_kernel_diag(const spectral_model& m, cplx s) {
    zeta_value z = epstein_zeta(m, s);
    q_kernel_value out;
    out.s = s;
    if (z.is_pole)
        throw pole_encountered("q_kernel_diag: pole of the continued zeta");
    out.value = z.value / m.volume();
    return out;
}

// Off-diagonal kernel of the -s power: entire in s.  Same split-Mellin
// construction; the phase makes the dual side a shifted-Gaussian branch sum
// that vanishes to infinite order as t -> 0, so no pole ladder appears except
// the kernel subtraction at s = 0 when xi = 0.
inline q_kernel_value q_kernel_offdiag(const spectral_model& m, cplx s,
                                       const std::vector<double>& x,
                                       const std::vector<double>& y) {
    const double d = torus_distance(m, x, y);
    if (d < 1e-12) throw on_diagonal("q_kernel_offdiag: x == y");
    const double xi = m.shift;
    const int n = m.n;

    std::vector<double> phi(n);
    for (int j = 0; j < n; ++j) phi[j] = std::remainder(x[j] - y[j], 2.0 * pi);

    double pmax = m.radii[0];
    for (double p : m.radii) pmax = std::max(pmax, p);
    const double mu1 = 1.0 / (pmax * pmax) + xi;
    const double c = std::max(1.0, d / (2.0 * std::sqrt(mu1)));

    double prod_p = 1.0;
    for (double p : m.radii) prod_p *= p;
    const double C = prod_p * std::pow(pi, 0.5 * n);

    const double kappa = (xi == 0.0) ? 1.0 : 0.0;

    auto big_t = [&](double t) -> cplx {
        double G = 1.0;
        for (int j = 0; j < n; ++j)
            G *= detail::theta_phase(t / (m.radii[j] * m.radii[j]), phi[j]);
        double w = G * std::exp(-xi * t) - kappa;
        if (w == 0.0) return {0.0, 0.0};
        double sgn = w > 0.0 ? 1.0 : -1.0;
        return sgn * detail::exp_guarded((s - 1.0) * std::log(t) + std::log(std::abs(w)));
    };
    cplx I1 = integrate_semi_infinite(big_t, c, 1e-13, 11).value;

    auto small_t = [&](double t) -> cplx {
        if (t <= 0.0) return {0.0, 0.0};
        double H = 1.0;
        for (int j = 0; j < n; ++j) {
            double a = m.radii[j] * m.radii[j] / (4.0 * t);
            H *= detail::gaussian_branch_sum(a, phi[j]);
            if (H == 0.0) return cplx{0.0, 0.0};
        }
        cplx w = (s - 0.5 * n - 1.0) * std::log(t) - xi * t + std::log(H);
        return C * detail::exp_guarded(w);
    };
    cplx I2 = integrate_finite(small_t, 0.0, c, 1e-13, 11).value;

    // f(s) = Gamma(s) q_{-s}(x,y) vol = I1 + I2 - kappa c^s / s
    q_kernel_value out;
    out.s = s;
    out.x = x;
    out.y = y;
    if (kappa > 0.0 && std::abs(s) < near_pole_threshold) {
        // f = -1/s + f_reg; q = (-rg'(0) ... ) -> value -1/vol exactly
        cplx f_reg = I1 + I2 - std::log(c);
        out.value = (-detail::recip_gamma_derivative(0.0) + f_reg * recip_gamma(cplx{0.0, 0.0}))
                    / m.volume();
        return out;
    }
    cplx f = I1 + I2 - kappa * cpow(c, s) / s;
    out.value = f * recip_gamma(s) / m.volume();
    return out;
}

// |LHS - RHS| of the reflection identity
//   pi^{-s} Gamma(s) zeta_n(s) = pi^{s-n/2} Gamma(n/2-s) zeta_n(n/2-s)
// for the unshifted unit-radius model.
inline double functional_equation_residual(const spectral_model& m, cplx s) {
    if (m.shift != 0.0 || !m.unit_radii())
        throw invalid_argument_error("functional_equation_residual: needs xi=0, unit radii");
    cplx lhs = cpow(pi, -s) * gamma(s) * epstein_zeta(m, s).value;
    cplx dual = cplx{0.5 * m.n, 0.0} - s;
    cplx rhs = cpow(pi, -dual) * gamma(dual) * epstein_zeta(m, dual).value;
    return std::abs(lhs - rhs);
}

// |(zeta_{xi+h}(s) - zeta_{xi-h}(s))/(2h) + s zeta_xi(s+1)|
inline double zeta_shift_derivative_check(const spectral_model& m, cplx s,
                                          double xi, double h) {
    if (!(xi > 0.0) || !(h > 0.0) || 2.0 * h >= xi)
        throw invalid_argument_error("zeta_shift_derivative_check: need 0 < 2h < xi");
    // Fourth-order central stencil: the lowest eigenvalue equals the shift,
    // so higher xi-derivatives of zeta grow like xi^{-Re(s)-k} and a plain
    // two-point difference would be dominated by its own truncation error.
    auto at = [&](double shift) {
        return epstein_zeta(spectral_model::make(m.n, m.radii, shift), s).value;
    };
    spectral_model mid = spectral_model::make(m.n, m.radii, xi);
    cplx num = (-at(xi + 2.0 * h) + 8.0 * at(xi + h)
                - 8.0 * at(xi - h) + at(xi - 2.0 * h)) / (12.0 * h);
    cplx rhs = -s * epstein_zeta(mid, s + 1.0).value;
    return std::abs(num - rhs);
}

struct nontriviality_report {
    std::vector<double> xi_grid;
    std::vector<double> abs_values;
    double min_abs = 0.0;
    bool all_nonzero = false;
};

// Scans zeta_{Delta+xi}(-r j) over a shift grid; the scaling argument needs a
// shift at which the value is nonzero, and this reports the evidence.
inline nontriviality_report nontriviality_scan(int n, const std::vector<double>& radii,
                                               const std::vector<double>& xi_grid,
                                               const rational_power& r, long long j) {
    double rj = r.value() * double(j);
    if (std::abs(rj - std::round(rj)) < 1e-12)
        throw invalid_argument_error("nontriviality_scan: r*j must not be an integer");
    nontriviality_report rep;
    rep.xi_grid = xi_grid;
    rep.min_abs = 1e300;
    for (double xi : xi_grid) {
        spectral_model m = spectral_model::make(n, radii, xi);
        double v = std::abs(epstein_zeta(m, cplx{-rj, 0.0}).value);
        rep.abs_values.push_back(v);
        rep.min_abs = std::min(rep.min_abs, v);
    }
    rep.all_nonzero = rep.min_abs > 0.0;
    return rep;
}

} // namespace fracheat
