#pragma once

#include "common.hpp"

#include <numeric>
#include <optional>

namespace fracheat {

// Exponent arithmetic for the small-time expansions is done over Q whenever
// the power is rational; collisions between exponent families must be decided
// exactly, not by floating-point comparison.
struct fraction {
    long long num = 0;
    long long den = 1;

    static fraction make(long long n, long long d) {
        if (d == 0) throw invalid_argument_error("fraction: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return {n, d};
    }
    double value() const { return double(num) / double(den); }
    bool operator==(const fraction& o) const { return num == o.num && den == o.den; }
    bool operator<(const fraction& o) const {
        return num * o.den < o.num * den; // magnitudes stay tiny here
    }
};

inline fraction operator+(fraction a, fraction b) {
    return fraction::make(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline fraction operator*(fraction a, fraction b) {
    return fraction::make(a.num * b.num, a.den * b.den);
}
inline fraction operator-(fraction a) { return {-a.num, a.den}; }

// A power r in (0,1), either an exact rational alpha/beta in lowest terms or
// an irrational double.  The expansion structure branches on parity of beta,
// so the rational case keeps the integers around.
struct rational_power {
    bool is_rational = false;
    long long alpha = 0; // only valid when is_rational
    long long beta = 1;  // only valid when is_rational
    double val = 0.0;

    // r = 1 is admitted for the plain (non-fractional) kernels; the expansion
    // machinery separately requires r < 1.
    static rational_power rational(long long a, long long b) {
        fraction f = fraction::make(a, b);
        if (f.num <= 0 || f.num > f.den)
            throw invalid_argument_error("rational_power: need 0 < a/b <= 1");
        rational_power r;
        r.is_rational = true;
        r.alpha = f.num;
        r.beta = f.den;
        r.val = f.value();
        return r;
    }
    static rational_power irrational(double x) {
        if (!(x > 0.0 && x <= 1.0))
            throw invalid_argument_error("rational_power: need 0 < r <= 1");
        rational_power r;
        r.is_rational = false;
        r.val = x;
        return r;
    }
    double value() const { return val; }

    // r * j as an exact fraction when rational.
    fraction times(long long j) const {
        if (!is_rational) throw invalid_argument_error("times: irrational power");
        return fraction::make(alpha * j, beta);
    }
};

// Parses "a/b" as an exact rational.  A terminating decimal with a short
// mantissa ("0.5", "0.25") is also an exact rational and is promoted to one,
// since the expansion case analysis depends on the parity of the denominator.
// Anything else (scientific notation, long mantissas) is kept as a double.
inline rational_power parse_power(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long a = std::stoll(s.substr(0, slash));
        long long b = std::stoll(s.substr(slash + 1));
        return rational_power::rational(a, b);
    }
    auto dot = s.find('.');
    bool plain = !s.empty() &&
                 s.find_first_not_of("0123456789.") == std::string::npos &&
                 s.find('.', dot + 1) == std::string::npos;
    if (plain && dot != std::string::npos && s.size() - dot - 1 <= 9) {
        long long digits = (long long)(s.size() - dot - 1);
        long long den = 1;
        for (long long i = 0; i < digits; ++i) den *= 10;
        long long num = std::stoll(s.substr(0, dot) + s.substr(dot + 1));
        return rational_power::rational(num, den);
    }
    if (plain && dot == std::string::npos)
        return rational_power::rational(std::stoll(s), 1);
    return rational_power::irrational(std::stod(s));
}

} // namespace fracheat
