#pragma once

#include "common.hpp"
#include "quadrature.hpp"
#include "rational_power.hpp"

#include <array>

namespace fracheat {

// Even-index Bernoulli numbers as exact rationals.  Fifteen entries is more
// than the Stirling tail ever consumes (10 terms).
struct bernoulli_table {
    struct entry {
        long long num;
        long long den;
        double value() const { return double(num) / double(den); }
    };
    static const std::array<entry, 15>& values() {
        static const std::array<entry, 15> tab = {{
            {1, 6},           // B2
            {-1, 30},         // B4
            {1, 42},          // B6
            {-1, 30},         // B8
            {5, 66},          // B10
            {-691, 2730},     // B12
            {7, 6},           // B14
            {-3617, 510},     // B16
            {43867, 798},     // B18
            {-174611, 330},   // B20
            {854513, 138},    // B22
            {-236364091, 2730}, // B24
            {8553103, 6},     // B26
            {-23749461029LL, 870}, // B28
            {8615841276005LL, 14322}, // B30
        }};
        return tab;
    }
};

namespace detail {

inline bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Stirling series with 10 Bernoulli correction terms; caller guarantees
// Re z >= 12, where the remainder bound |B20|/(380) * sec^20(arg z/2) / |z|^19
// is below 1e-15 of the result.
inline cplx log_gamma_stirling(cplx z) {
    const cplx lz = std::log(z);
    cplx out = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * pi);
    const auto& B = bernoulli_table::values();
    cplx zpow = z; // z^(2j-1)
    const cplx z2 = z * z;
    for (int j = 1; j <= 10; ++j) {
        out += B[j - 1].value() / double(2 * j * (2 * j - 1)) / zpow;
        zpow *= z2;
    }
    return out;
}

} // namespace detail

// Principal-branch log Gamma.  Recurrence pushes Re z up to the Stirling
// regime; the shift count is bounded because only Re matters (Stirling is
// safe at any height once Re z >= 12, since |arg z/2| < pi/4 there).
inline cplx log_gamma(cplx z) {
    if (detail::is_nonpositive_integer(z))
        throw pole_encountered("log_gamma: nonpositive integer argument");
    cplx shift = 0.0;
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::log_gamma_stirling(z) - shift;
}

// Entire reciprocal 1/Gamma; exactly zero at the poles of Gamma.
inline cplx recip_gamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

// Meromorphic ratio Gamma(s)/Gamma(rs).  At a common pole (s = -m, rs = -p,
// both nonnegative integers) the poles cancel and the limit is
// (-1)^(m-p) * p! * r / m!, from the ratio of the residue factors.
inline cplx gamma_ratio(cplx s, double r) {
    if (detail::is_nonpositive_integer(s)) {
        const long long m = llround(-s.real());
        const double rp = r * double(m);
        const long long p = llround(rp);
        if (std::abs(rp - double(p)) < 1e-12 && double(p) >= 0.0) {
            double lim = r;
            // p!/m! accumulated in log space to dodge overflow at large m
            double lg = std::lgamma(double(p) + 1.0) - std::lgamma(double(m) + 1.0);
            lim *= std::exp(lg);
            if ((m - p) % 2 != 0) lim = -lim;
            return {lim, 0.0};
        }
        throw pole_encountered("gamma_ratio: Gamma(s) poles, Gamma(rs) finite");
    }
    cplx den = recip_gamma(s);
    cplx num = recip_gamma(r * s);
    if (den == cplx{0.0, 0.0})
        throw pole_encountered("gamma_ratio: pole of Gamma(s)");
    return num / den;
}

inline cplx gamma_ratio(cplx s, const rational_power& r) {
    return gamma_ratio(s, r.value());
}

// |a+ib|^k * |Gamma(a+ib)/Gamma(r(a+ib))| along a vertical line; the
// super-polynomial decay of this profile is what justifies truncating the
// inverse-Mellin contour.
inline std::vector<double> decay_profile(const rational_power& r, double a,
                                         int k, const std::vector<double>& b_grid) {
    if (b_grid.empty()) return {};
    for (size_t i = 0; i < b_grid.size(); ++i) {
        if (b_grid[i] <= 0.0 || (i > 0 && b_grid[i] <= b_grid[i - 1]))
            throw invalid_argument_error("decay_profile: b_grid must be positive increasing");
    }
    std::vector<double> out;
    out.reserve(b_grid.size());
    for (double b : b_grid) {
        cplx s{a, b};
        // work in log space: exp can underflow to 0, which is fine
        cplx lr = log_gamma(s) - log_gamma(r.value() * s);
        double logmag = lr.real() + k * std::log(std::abs(s));
        out.push_back(logmag < -745.0 ? 0.0 : std::exp(logmag));
    }
    return out;
}

namespace detail {

// Continued fraction for Gamma(z, xi) (modified Lentz); rapidly convergent
// when xi is not small compared with |z|.
inline double upper_gamma_cf(double z, double xi) {
    // modified Lentz on Gamma(z,xi) = e^{-xi} xi^z / (xi+1-z - 1(1-z)/(xi+3-z - ...))
    const double tiny = 1e-300;
    double b = xi + 1.0 - z;
    double c = 1.0 / tiny;
    double d = 1.0 / (b == 0.0 ? tiny : b);
    double h = d;
    for (int i = 1; i < 400; ++i) {
        double an = -double(i) * (double(i) - z);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-xi + z * std::log(xi)) * h;
}

// E1(xi) = Gamma(0, xi): alternating series for small xi, continued fraction
// otherwise.
inline double exp_integral_e1(double xi) {
    if (xi < 1.0) {
        double sum = 0.0, term = -1.0;
        for (int k = 1; k < 60; ++k) {
            term *= -xi / double(k);
            sum += term / double(k);
            if (std::abs(term) < 1e-20 * (std::abs(sum) + 1.0)) break;
        }
        return -euler_gamma - std::log(xi) + sum;
    }
    return upper_gamma_cf(0.0, xi);
}

} // namespace detail

// Upper incomplete Gamma(z, xi) for real z (contract: integers and
// half-integers, |z| <= 30) and xi in [1e-8, 50].
//
// Strategy: base cases at z in [0, 1]; upward recurrence for larger z
// (all-positive terms, stable); for negative z the continued fraction when
// xi dominates |z|, otherwise a cancellation-free positive integral.
inline double upper_incomplete_gamma(double z, double xi) {
    if (!(xi > 0.0)) throw invalid_argument_error("upper_incomplete_gamma: xi <= 0");

    if (z > 1.0 && xi > 40.0) return detail::upper_gamma_cf(z, xi);
    if (z < 0.0) {
        // Downward recurrence cancels catastrophically (about one digit per
        // unit of |z| once the boundary term dominates), so negative orders
        // always use a cancellation-free route: the continued fraction when
        // xi dominates |z|, otherwise the substituted integral
        //   Gamma(z, xi) = xi^z e^{-xi} int_0^inf (1+w)^{z-1} e^{-xi w} dw,
        // whose integrand is positive and double-exponentially summable.
        if (xi >= std::abs(z)) return detail::upper_gamma_cf(z, xi);
        auto q = integrate_semi_infinite(
            [&](double w) { return std::pow(1.0 + w, z - 1.0) * std::exp(-xi * w); },
            0.0, 1e-14, 12);
        return std::exp(-xi + z * std::log(xi)) * q.value;
    }

    auto base = [&](double z0) -> double {
        if (z0 == 1.0) return std::exp(-xi);
        if (z0 == 0.5) return sqrt_pi * std::erfc(std::sqrt(xi));
        if (z0 == 0.0) return detail::exp_integral_e1(xi);
        // general real z0 in (0,1]: series for the lower gamma, complement
        double lg = std::lgamma(z0);
        double sum = 0.0, term = 1.0 / z0;
        for (int k = 0; k < 300; ++k) {
            sum += term;
            term *= xi / (z0 + double(k) + 1.0);
            if (term < 1e-18 * sum) break;
        }
        double lower = std::exp(-xi + z0 * std::log(xi)) * sum;
        return std::exp(lg) - lower;
    };

    if (z >= 0.0 && z <= 1.0) return base(z);

    // z > 1: upward recurrence from the base strip (all terms positive)
    double frac = z - std::floor(z);
    double z0 = (frac == 0.0) ? 1.0 : frac;
    double g = base(z0);
    double zz = z0;
    double xpow = std::exp(-xi + zz * std::log(xi));
    while (zz < z - 0.5) {
        g = zz * g + xpow;
        xpow *= xi;
        zz += 1.0;
    }
    return g;
}

} // namespace fracheat
