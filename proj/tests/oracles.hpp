#pragma once

// Independent reference values for the test suites.  Everything here is
// computed from closed forms, libm, or elementary numerics (direct sums,
// adaptive Simpson) and shares no code with the library under test.

#include <cmath>
#include <functional>

namespace oracles {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Diagonal kernel of the half-power operator on the unit circle:
// (1/2pi) sum_k e^{-t|k|} = coth(t/2)/(2 pi).
inline double coth_kernel(double t) { return (1.0 / std::tanh(0.5 * t)) / (2.0 * pi); }

// Off-diagonal kernel of the half-power operator on the unit circle at angle
// phi: geometric summation of (1/2pi) sum_k e^{-t|k|} e^{ik phi}.
inline double poisson_kernel(double t, double phi) {
    double e = std::exp(-t);
    return (1.0 - e * e) / (1.0 - 2.0 * e * std::cos(phi) + e * e) / (2.0 * pi);
}

// Abel-summation closed form for the half-power complex-power kernel on the
// unit circle: q_{1/2}(phi) = -1/(2 pi (1 - cos phi)).
inline double abel_q_half(double phi) { return -1.0 / (2.0 * pi * (1.0 - std::cos(phi))); }

// Riemann zeta for real s > 1: direct sum plus Euler-Maclaurin tail.
inline double riemann_zeta(double s) {
    const int K = 40;
    double sum = 0.0;
    for (int k = K - 1; k >= 1; --k) sum += std::pow(double(k), -s);
    double Kd = K;
    sum += std::pow(Kd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Kd, -s) +
           s / 12.0 * std::pow(Kd, -s - 1.0) -
           s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(Kd, -s - 3.0);
    return sum;
}

// Brute-force lattice sum sum_{0<|k|<=R} |k|^{-4} over the square lattice in
// the plane, with the continuum tail integral pi/R^2 for |k| > R.
inline double lattice_zeta2_at_2(long long R = 10000) {
    double sum = 0.0;
    // quadrant symmetry: axes counted 4x, interior points 4x
    for (long long a = R; a >= 1; --a) {
        double inv = 1.0 / (double(a) * double(a));
        sum += 4.0 * inv * inv; // (a, 0), (-a, 0), (0, a), (0, -a)
    }
    double R2 = double(R) * double(R);
    for (long long a = 1; a <= R; ++a) {
        double a2 = double(a) * double(a);
        long long bmax = (long long)std::floor(std::sqrt(R2 - a2));
        double inner = 0.0;
        for (long long b = bmax; b >= 1; --b) {
            double q = a2 + double(b) * double(b);
            inner += 1.0 / (q * q);
        }
        sum += 4.0 * inner;
    }
    return sum + pi / R2;
}

// Adaptive Simpson quadrature, used below for an incomplete-gamma reference.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-14) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Gamma(z, xi) for z real by quadrature of the defining integral after the
// substitution u = xi e^v, which tames the u^{z-1} steepness near u = xi.
inline double upper_gamma(double z, double xi) {
    double vmax = std::log((xi + 60.0 + 10.0 * std::abs(z)) / xi);
    return adaptive_simpson(
        [z, xi](double v) {
            double u = xi * std::exp(v);
            return std::exp(-u + z * std::log(u));
        },
        0.0, vmax);
}

// |Gamma(1 + iy)| from the reflection closed form.
inline double abs_gamma_1_plus_iy(double y) {
    return std::sqrt(pi * y / std::sinh(pi * y));
}

} // namespace oracles
