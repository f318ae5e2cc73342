#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>
#include <cmath>
#include <cstdint>

namespace fracheat {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;

// Error taxonomy.  Every failure mode the library promises to detect maps to
// one of these; callers can catch fracheat_error to get all of them.
struct fracheat_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_encountered : fracheat_error { using fracheat_error::fracheat_error; };
struct budget_exceeded : fracheat_error { using fracheat_error::fracheat_error; };
struct cutoff_too_large : fracheat_error { using fracheat_error::fracheat_error; };
struct on_diagonal : fracheat_error { using fracheat_error::fracheat_error; };
struct contour_too_short : fracheat_error { using fracheat_error::fracheat_error; };
struct abscissa_too_small : fracheat_error { using fracheat_error::fracheat_error; };
struct ill_conditioned : fracheat_error { using fracheat_error::fracheat_error; };
struct insufficient_samples : fracheat_error { using fracheat_error::fracheat_error; };
struct inconsistent_laurent : fracheat_error { using fracheat_error::fracheat_error; };
struct quadrature_failure : fracheat_error { using fracheat_error::fracheat_error; };
struct invalid_argument_error : fracheat_error { using fracheat_error::fracheat_error; };

// t^z for t > 0, without the libm pow(complex) overhead and with a defined
// story at t == 0 (limit along the positive axis when Re z > 0).
inline cplx cpow(double t, cplx z) {
    if (t <= 0.0) {
        if (z.real() > 0.0) return {0.0, 0.0};
        throw invalid_argument_error("cpow: nonpositive base with nonpositive exponent");
    }
    const double lt = std::log(t);
    const double re = z.real() * lt;
    if (re < -745.0) return {0.0, 0.0};
    const double mag = std::exp(re);
    const double ph = z.imag() * lt;
    return {mag * std::cos(ph), mag * std::sin(ph)};
}

// Compensated accumulator (Kahan-Babuska); lattice sums run to 1e8 terms and
// plain accumulation would lose the tail we are trying to resolve.
struct kahan_sum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace fracheat
