#pragma once

#include "common.hpp"
#include "models.hpp"
#include "rational_power.hpp"
#include "specfun.hpp"
#include "zeta.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace fracheat {

enum class term_label { neg_ladder, integer, fractional, log };
enum class expansion_case { even, odd_plain, odd_log };

struct expansion_term {
    double exponent = 0.0;
    fraction exp_frac{};   // meaningful when exact
    bool exact = false;
    int log_power = 0;
    term_label label = term_label::integer;
    long long j = 0; // family index (j in the ladder formulas, l for log terms)
};

struct expansion_template {
    int n = 1;
    rational_power r;
    expansion_case kind = expansion_case::even;
    std::vector<expansion_term> terms;
};

struct coefficient_row {
    expansion_term term;
    double predicted = 0.0;
    bool has_fitted = false;
    double fitted = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

struct coefficient_report {
    expansion_template tmpl;
    std::vector<coefficient_row> rows;
    bool all_pass = true;
};

// Builds the exponent/log-power template of the diagonal small-time
// expansion, truncated at max_exponent.  Three regimes:
//  even:      n even — negative ladder, constant, all positive integers
//  odd_plain: n odd, r irrational or denominator odd — negative ladder,
//             integers off multiples of beta, half-ladder (2j+1)/(2r)
//  odd_log:   n odd, denominator even — additionally t^{l beta/2} log t pairs
inline expansion_template predict_exponents(int n, const rational_power& r,
                                            double max_exponent) {
    if (n < 1) throw invalid_argument_error("predict_exponents: n >= 1");
    if (!(r.value() < 1.0))
        throw invalid_argument_error("predict_exponents: need r < 1");
    expansion_template out;
    out.n = n;
    out.r = r;
    const double rr = r.value();
    const bool rational = r.is_rational;
    const long long alpha = rational ? r.alpha : 0;
    const long long beta = rational ? r.beta : 0;

    if (n % 2 == 0) out.kind = expansion_case::even;
    else if (!rational || beta % 2 == 1) out.kind = expansion_case::odd_plain;
    else out.kind = expansion_case::odd_log;

    auto add = [&](double e, fraction f, bool exact, int lp, term_label lab, long long j) {
        if (e > max_exponent + 1e-12) return;
        expansion_term t;
        t.exponent = e;
        t.exp_frac = f;
        t.exact = exact;
        t.log_power = lp;
        t.label = lab;
        t.j = j;
        out.terms.push_back(t);
    };

    // negative ladder -(n-2j)/(2r), j = 0 .. ceil(n/2)-1
    for (long long j = 0; 2 * j < n; ++j) {
        double e = -double(n - 2 * j) / (2.0 * rr);
        fraction f = rational ? fraction::make(-(n - 2 * j) * beta, 2 * alpha) : fraction{};
        add(e, f, rational, 0, term_label::neg_ladder, j);
    }

    if (n % 2 == 0) {
        add(0.0, fraction{0, 1}, true, 0, term_label::integer, 0);
        for (long long j = 1; double(j) <= max_exponent + 1e-12; ++j)
            add(double(j), fraction{j, 1}, true, 0, term_label::integer, j);
    } else {
        for (long long j = 1; double(j) <= max_exponent + 1e-12; ++j) {
            if (out.kind == expansion_case::odd_plain && rational && j % beta == 0)
                continue; // A_{l beta} vanishes identically
            if (out.kind == expansion_case::odd_log && j % (beta / 2) == 0)
                continue; // replaced by the log pairs (or vanishing at l even)
            add(double(j), fraction{j, 1}, true, 0, term_label::integer, j);
        }
        // half ladder (2j+1)/(2r), j >= 0; in the log case the indices with
        // alpha | 2j+1 migrate into the log pairs below
        for (long long j = 0;; ++j) {
            double e = double(2 * j + 1) / (2.0 * rr);
            if (e > max_exponent + 1e-12) break;
            if (out.kind == expansion_case::odd_log && (2 * j + 1) % alpha == 0)
                continue;
            fraction f = rational ? fraction::make((2 * j + 1) * beta, 2 * alpha) : fraction{};
            add(e, f, rational, 0, term_label::fractional, j);
        }
        if (out.kind == expansion_case::odd_log) {
            for (long long l = 1;; l += 2) {
                long long k = l * beta / 2;
                if (double(k) > max_exponent + 1e-12) break;
                add(double(k), fraction{k, 1}, true, 0, term_label::log, l);
                add(double(k), fraction{k, 1}, true, 1, term_label::log, l);
            }
        }
    }

    std::stable_sort(out.terms.begin(), out.terms.end(),
                     [](const expansion_term& a, const expansion_term& b) {
                         if (a.exponent != b.exponent) return a.exponent < b.exponent;
                         return a.log_power < b.log_power;
                     });
    return out;
}

struct laurent_data {
    cplx finite_part{};
    cplx residue{};
};

// Laurent coefficients c0 (finite part) and c_{-1} (residue) of f at s0,
// extracted by trapezoid quadrature over circles of the given radius and half
// of it; the two radii must agree on c0 (aliasing consistency), otherwise the
// claimed pole order is wrong.
inline laurent_data finite_part(const std::function<cplx(cplx)>& f, cplx s0,
                                double radius = 0.25) {
    auto extract = [&](double rho) {
        const int N = 64;
        cplx c0 = 0.0, cm1 = 0.0;
        for (int k = 0; k < N; ++k) {
            double th = 2.0 * pi * double(k) / double(N);
            cplx e{std::cos(th), std::sin(th)};
            cplx fv = f(s0 + rho * e);
            c0 += fv;
            cm1 += fv * rho * e;
        }
        return std::make_pair(c0 / double(N), cm1 / double(N));
    };
    auto [c0a, ra] = extract(radius);
    auto [c0b, rb] = extract(0.5 * radius);
    if (std::abs(c0a - c0b) > 1e-8 * std::max(1.0, std::abs(c0b)))
        throw inconsistent_laurent("finite_part: radii disagree on the constant term");
    laurent_data out;
    out.finite_part = c0b;
    out.residue = rb;
    return out;
}

// Fills the predicted coefficient for every template term at a diagonal
// point.  The integer family goes through the continued zeta (its Laurent
// value at trivial-zero collisions included); the ladders are closed-form
// Gamma-factor expressions; the log pairs use the double-pole residue data,
// which brings in the two finite parts.
inline coefficient_report predict_coefficients(const spectral_model& m,
                                               const rational_power& r,
                                               const expansion_template& tmpl) {
    const int n = m.n;
    const double rr = r.value();
    const double vol = m.volume();
    const long long alpha = r.is_rational ? r.alpha : 0;

    int max_aj = n + 2;
    for (const auto& t : tmpl.terms)
        max_aj = std::max<int>(max_aj, (int)std::ceil(std::abs(t.exponent) * 2 + n) + 2);
    heat_coefficients_t a = heat_coefficients(m, max_aj);

    auto factorial = [](long long k) { return std::exp(std::lgamma(double(k) + 1.0)); };

    coefficient_report rep;
    rep.tmpl = tmpl;
    for (const auto& t : tmpl.terms) {
        coefficient_row row;
        row.term = t;
        switch (t.label) {
            case term_label::neg_ladder: {
                double w1 = double(n - 2 * t.j) / (2.0 * rr);
                double w2 = double(n - 2 * t.j) / 2.0;
                row.predicted = std::exp(std::lgamma(w1) - std::lgamma(w2)) *
                                a.at(t.j) / rr;
                break;
            }
            case term_label::integer: {
                if (t.j == 0) { // constant term, n even: a_{n/2}
                    row.predicted = a.at(n / 2);
                    break;
                }
                cplx q = epstein_zeta(m, cplx{-rr * double(t.j), 0.0}).value / vol;
                double sign = (t.j % 2 == 0) ? 1.0 : -1.0;
                row.predicted = sign / factorial(t.j) * q.real();
                break;
            }
            case term_label::fractional: {
                double w1 = -double(2 * t.j + 1) / (2.0 * rr);
                double w2 = -double(2 * t.j + 1) / 2.0;
                cplx ratio = recip_gamma(cplx{w2, 0.0}) / recip_gamma(cplx{w1, 0.0});
                long long aj = (n + 2 * t.j + 1) / 2;
                row.predicted = ratio.real() * a.at(aj) / rr;
                break;
            }
            case term_label::log: {
                long long l = t.j;
                long long k = llround(t.exponent);
                long long aj = (n + l * alpha) / 2;
                double sgn = (k % 2 == 0) ? 1.0 : -1.0;
                cplx g_neg_kr = 1.0 / recip_gamma(cplx{-rr * double(k), 0.0});
                if (t.log_power == 1) {
                    // the expansion of t^{-s} around s = -k carries -(s+k)log t,
                    // so the log coefficient is minus the product of the two
                    // residue factors
                    row.predicted = -sgn / (rr * factorial(k) * g_neg_kr.real()) * a.at(aj);
                } else {
                    auto f1 = [&](cplx s) {
                        cplx w = rr * s;
                        return gamma(w) * epstein_zeta(m, w).value / vol;
                    };
                    auto f2 = [&](cplx s) { return gamma_ratio(s, rr); };
                    laurent_data L1 = finite_part(f1, cplx{-double(k), 0.0});
                    laurent_data L2 = finite_part(f2, cplx{-double(k), 0.0});
                    double c1 = sgn / (factorial(k) * g_neg_kr.real());
                    row.predicted = c1 * L1.finite_part.real() +
                                    L2.finite_part.real() * a.at(aj) / rr;
                }
                break;
            }
        }
        rep.rows.push_back(row);
    }
    return rep;
}

// Off-diagonal Taylor coefficients (-1)^j/j! q_{rj}(x,y), with the exact
// zeros at j in beta N* when r is rational.
inline coefficient_report offdiag_taylor_prediction(const spectral_model& m,
                                                    const rational_power& r,
                                                    const std::vector<double>& x,
                                                    const std::vector<double>& y,
                                                    int J) {
    if (torus_distance(m, x, y) < 1e-12)
        throw on_diagonal("offdiag_taylor_prediction: x == y");
    coefficient_report rep;
    rep.tmpl.n = m.n;
    rep.tmpl.r = r;
    for (int j = 1; j <= J; ++j) {
        expansion_term t;
        t.exponent = double(j);
        t.exp_frac = fraction{j, 1};
        t.exact = true;
        t.label = term_label::integer;
        t.j = j;
        rep.tmpl.terms.push_back(t);

        coefficient_row row;
        row.term = t;
        if (r.is_rational && j % r.beta == 0) {
            row.predicted = 0.0;
        } else {
            cplx q = q_kernel_offdiag(m, cplx{-r.value() * double(j), 0.0}, x, y).value;
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            row.predicted = sign / std::exp(std::lgamma(double(j) + 1.0)) * q.real();
        }
        rep.rows.push_back(row);
    }
    return rep;
}

// |q_{r l beta}(x,x) - (-1)^{l alpha} (l alpha)! a_{n/2 + l alpha}|: the even-
// dimension identity tying the trivial-zero Laurent value of the continued
// zeta to a heat coefficient.
inline double even_case_identity_check(const spectral_model& m,
                                       const rational_power& r, long long l) {
    if (m.n % 2 != 0)
        throw invalid_argument_error("even_case_identity_check: n must be even");
    if (!r.is_rational)
        throw invalid_argument_error("even_case_identity_check: r must be rational");
    if (l < 1) throw invalid_argument_error("even_case_identity_check: l >= 1");
    const long long la = l * r.alpha;
    cplx lhs = epstein_zeta(m, cplx{-double(la), 0.0}).value / m.volume();
    long long aj = m.n / 2 + la;
    double rhs = std::exp(std::lgamma(double(la) + 1.0)) *
                 heat_coefficients(m, (int)aj).at(aj);
    if (la % 2 != 0) rhs = -rhs;
    return std::abs(lhs.real() - rhs);
}

} // namespace fracheat
