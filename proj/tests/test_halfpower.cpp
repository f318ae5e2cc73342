#include <doctest.h>

#include <fracheat/halfpower.hpp>

#include "oracles.hpp"

using namespace fracheat;

static const spectral_model circle = spectral_model::unit(1);
static const std::vector<double> origin{0.0};

TEST_CASE("subordination reproduces the closed-form circle kernel") {
    for (double t : {0.1, 0.7, 3.0}) {
        auto s = subordinated_kernel(circle, t, origin, origin);
        CHECK(s.value == doctest::Approx(oracles::coth_kernel(t)).epsilon(1e-8));
    }
    std::vector<double> y{1.9};
    for (double t : {0.1, 0.7}) {
        auto s = subordinated_kernel(circle, t, origin, y);
        CHECK(s.value == doctest::Approx(oracles::poisson_kernel(t, 1.9)).epsilon(1e-8));
    }
}

TEST_CASE("incomplete-gamma expansion captures the singular part") {
    // Diagonal, N=0: the single term reduces to e^{-t^2/4}/(pi t), so the
    // leading behavior is 1/(pi t) as t -> 0.
    for (double t : {1e-2, 1e-3}) {
        auto e = incomplete_gamma_expansion(circle, 0, t, origin, origin);
        CHECK(e.value * oracles::pi * t ==
              doctest::Approx(std::exp(-t * t / 4.0)).epsilon(1e-12));
    }
    // Fixed distance, t -> 0: the value vanishes linearly in t.
    std::vector<double> y{1.0};
    double prev_ratio = 0.0;
    for (double t : {2e-2, 1e-2, 5e-3}) {
        auto e = incomplete_gamma_expansion(circle, 4, t, origin, y);
        double ratio = e.value / t;
        if (prev_ratio != 0.0)
            CHECK(ratio == doctest::Approx(prev_ratio).epsilon(2e-4));
        prev_ratio = ratio;
    }
    // The remainder estimate reports the gap to the subordinated kernel
    // (minus the projection density); it is a smooth O(1) quantity here.
    auto e = incomplete_gamma_expansion(circle, 2, 0.1, origin, y);
    double sub = subordinated_kernel(circle, 0.1, origin, y).value -
                 kernel_projection_density(circle);
    CHECK(e.remainder_estimate ==
          doctest::Approx(std::abs(e.value - sub)).epsilon(1e-10));
    CHECK(e.remainder_estimate < 1.0);
}

TEST_CASE("blow-up point validation") {
    blowup_point pt;
    pt.rho = 0.1;
    pt.omega0 = 0.6;
    pt.omega_prime = {0.8};
    pt.base = {0.0};
    CHECK_NOTHROW(pt.validate(1));
    pt.omega_prime = {0.9};
    CHECK_THROWS_AS(pt.validate(1), invalid_argument_error);
}

TEST_CASE("pullback vanishes on the lateral boundary corner") {
    blowup_point pt;
    pt.rho = 0.2;
    pt.omega0 = 0.0;
    pt.omega_prime = {1.0};
    pt.base = {0.0};
    CHECK(blowup_pullback(circle, pt) == 0.0);
}

TEST_CASE("front face limit on the flat two-torus") {
    spectral_model m = spectral_model::unit(2);
    std::vector<double> rho{0.4, 0.2, 0.1, 0.05, 0.025};
    auto prof = front_face_profile(m, 1.0, {0.0, 0.0}, rho);
    CHECK(prof.pass);
    CHECK(prof.predicted_limit == doctest::Approx(1.0 / (2.0 * oracles::pi)).epsilon(1e-12));
    CHECK(prof.limit == doctest::Approx(prof.predicted_limit).epsilon(1e-3));
}
