#pragma once

#include "common.hpp"
#include "quadrature.hpp"
#include "rational_power.hpp"

#include <algorithm>
#include <map>

namespace fracheat {

// Product-of-circles model: eigenvalues sum_j (k_j/p_j)^2 + shift over the
// integer lattice.
struct spectral_model {
    int n = 1;
    std::vector<double> radii; // p_j > 0
    double shift = 0.0;        // xi >= 0

    static spectral_model make(int n, std::vector<double> radii, double shift) {
        if (n < 1) throw invalid_argument_error("spectral_model: n >= 1 required");
        if (radii.empty()) radii.assign(n, 1.0);
        if ((int)radii.size() != n)
            throw invalid_argument_error("spectral_model: radii size mismatch");
        for (double p : radii)
            if (!(p > 0.0)) throw invalid_argument_error("spectral_model: radii > 0");
        if (shift < 0.0) throw invalid_argument_error("spectral_model: shift >= 0");
        return {n, std::move(radii), shift};
    }
    static spectral_model unit(int n, double shift = 0.0) {
        return make(n, std::vector<double>(n, 1.0), shift);
    }

    double volume() const {
        double v = 1.0;
        for (double p : radii) v *= 2.0 * pi * p;
        return v;
    }
    bool unit_radii() const {
        for (double p : radii)
            if (p != 1.0) return false;
        return true;
    }
};

inline double kernel_projection_density(const spectral_model& m) {
    return m.shift > 0.0 ? 0.0 : 1.0 / m.volume();
}

// a_j = (4 pi)^{-n/2} (-xi)^j / j!; the flat factors contribute only a_0 and
// the shift enters through the exact factor e^{-t xi}.
struct heat_coefficients_t {
    std::vector<double> values;
    double at(size_t j) const {
        if (j >= values.size()) throw invalid_argument_error("heat coefficient index");
        return values[j];
    }
};

inline heat_coefficients_t heat_coefficients(const spectral_model& m, int J) {
    if (J < 0) throw invalid_argument_error("heat_coefficients: J >= 0");
    heat_coefficients_t out;
    out.values.resize(J + 1);
    const double a0 = std::pow(4.0 * pi, -0.5 * m.n);
    double term = a0;
    for (int j = 0; j <= J; ++j) {
        out.values[j] = term;
        term *= -m.shift / double(j + 1);
    }
    return out;
}

struct eigenvalue_list {
    std::vector<std::pair<double, long long>> entries; // (lambda, multiplicity)
    double cutoff = 0.0;
    double tail_bound = 0.0; // bound on omitted sum of e^{-t lambda^r}
    double t_ref = 1.0;
    double r_ref = 1.0;
};

namespace detail {

// Visits all lattice points with sum (k_j/p_j)^2 <= radius2.
template <class Fn>
void for_each_lattice_point(const std::vector<double>& radii, double radius2, Fn&& fn) {
    const int n = (int)radii.size();
    std::vector<long long> k(n, 0);
    // recursive descent over coordinates
    auto rec = [&](auto&& self, int dim, double used) -> void {
        if (dim == n) {
            fn(k, used);
            return;
        }
        double rem = radius2 - used;
        if (rem < 0.0) return;
        long long kmax = (long long)std::floor(std::sqrt(rem) * radii[dim] + 1e-12);
        for (long long kk = -kmax; kk <= kmax; ++kk) {
            k[dim] = kk;
            double q = double(kk) / radii[dim];
            self(self, dim + 1, used + q * q);
        }
    };
    rec(rec, 0, 0.0);
}

inline double lattice_point_estimate(const std::vector<double>& radii, double radius2) {
    double est = 1.0;
    for (double p : radii) est *= 2.0 * p * std::sqrt(std::max(radius2, 0.0)) + 1.0;
    return est;
}

} // namespace detail

// Bound on sum_{lambda > cutoff} e^{-t lambda^r} by integral comparison: the
// counting function of base eigenvalues mu <= u is under prod(2 p_j sqrt(u)+1),
// and summation by parts turns the tail into an integral against -f'(u).
inline double eigensum_tail_bound(const spectral_model& m, double cutoff,
                                  double t, double r) {
    const double xi = m.shift;
    auto f = [&](double u) { return std::exp(-t * std::pow(u + xi, r)); };
    auto nbar = [&](double u) {
        double v = 1.0;
        for (double p : m.radii) v *= 2.0 * p * std::sqrt(std::max(u, 0.0)) + 1.0;
        return v;
    };
    const double mu0 = std::max(cutoff - xi, 0.0);
    auto integrand = [&](double u) {
        double lam = u + xi;
        double fp = t * r * std::pow(lam, r - 1.0) * f(u); // = -d/du f
        return fp * nbar(u);
    };
    auto q = integrate_semi_infinite(integrand, mu0, 1e-10, 12);
    return q.value + q.error;
}

inline eigenvalue_list enumerate_eigenvalues(const spectral_model& m, double cutoff,
                                             double t = 1.0, double r = 1.0,
                                             double budget = 1e8) {
    if (!(cutoff > m.shift))
        throw invalid_argument_error("enumerate_eigenvalues: cutoff <= shift");
    const double radius2 = cutoff - m.shift;
    if (detail::lattice_point_estimate(m.radii, radius2) > budget)
        throw cutoff_too_large("enumerate_eigenvalues: lattice budget exceeded");

    bool unit = m.unit_radii();
    eigenvalue_list out;
    out.cutoff = cutoff;
    out.t_ref = t;
    out.r_ref = r;
    if (unit) {
        // exact integer grouping by sum of squares
        std::map<long long, long long> groups;
        detail::for_each_lattice_point(m.radii, radius2, [&](const std::vector<long long>& k, double) {
            long long key = 0;
            for (long long kk : k) key += kk * kk;
            ++groups[key];
        });
        for (auto& [key, mult] : groups)
            out.entries.emplace_back(double(key) + m.shift, mult);
    } else {
        std::vector<double> lams;
        detail::for_each_lattice_point(m.radii, radius2, [&](const std::vector<long long>&, double mu) {
            lams.push_back(mu + m.shift);
        });
        std::sort(lams.begin(), lams.end());
        for (double lam : lams) {
            if (!out.entries.empty() && std::abs(out.entries.back().first - lam) <= 1e-12 * (1.0 + lam))
                ++out.entries.back().second;
            else
                out.entries.emplace_back(lam, 1);
        }
    }
    out.tail_bound = eigensum_tail_bound(m, cutoff, t, r);
    return out;
}

// Geodesic distance on the product torus: minimize the weighted flat metric
// over nearest-branch angle differences.
inline double torus_distance(const spectral_model& m, const std::vector<double>& x,
                             const std::vector<double>& y) {
    if ((int)x.size() != m.n || (int)y.size() != m.n)
        throw invalid_argument_error("torus_distance: point dimension mismatch");
    double d2 = 0.0;
    for (int j = 0; j < m.n; ++j) {
        double dth = std::remainder(x[j] - y[j], 2.0 * pi);
        d2 += m.radii[j] * m.radii[j] * dth * dth;
    }
    return std::sqrt(d2);
}

} // namespace fracheat
