#include <doctest.h>

#include <fracheat/heat.hpp>

#include "oracles.hpp"

using namespace fracheat;

static const spectral_model circle = spectral_model::unit(1);
static const rational_power half = rational_power::rational(1, 2);
static const std::vector<double> origin{0.0};

TEST_CASE("eigensum matches the closed-form diagonal kernel") {
    for (double t : {0.2, 1.0, 4.0}) {
        auto s = heat_kernel_direct(circle, half, t, origin, origin, 1e-13);
        CHECK(s.value == doctest::Approx(oracles::coth_kernel(t)).epsilon(1e-11));
        CHECK(s.error_bound < 1e-11);
    }
}

TEST_CASE("eigensum matches the closed-form off-diagonal kernel") {
    for (double phi : {0.7, oracles::pi / 2.0, 2.9}) {
        std::vector<double> y{phi};
        auto s = heat_kernel_direct(circle, half, 0.6, origin, y, 1e-13);
        CHECK(s.value ==
              doctest::Approx(oracles::poisson_kernel(0.6, phi)).epsilon(1e-10));
    }
}

TEST_CASE("inverse Mellin contour agrees with the oracle") {
    for (double t : {0.3, 1.0}) {
        auto s = heat_kernel_inverse_mellin(circle, half, t, origin, {}, 1e-9);
        CHECK(s.value == doctest::Approx(oracles::coth_kernel(t)).epsilon(1e-7));
    }
}

TEST_CASE("inverse Mellin rejects an abscissa inside the pole strip") {
    contour_params contour;
    contour.tau = 0.5; // needs tau > n/(2r) = 1
    CHECK_THROWS_AS(
        (void)heat_kernel_inverse_mellin(circle, half, 1.0, origin, contour, 1e-8),
        abscissa_too_small);
}

TEST_CASE("theta-accelerated kernel equals the second-order eigensum") {
    rational_power one = rational_power::rational(1, 1);
    for (double t : {0.05, 0.5, 2.0}) {
        auto a = heat_kernel_poisson(circle, t, origin, origin);
        auto b = heat_kernel_direct(circle, one, t, origin, origin, 1e-14);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
    }
}

TEST_CASE("budget exhaustion raises") {
    CHECK_THROWS_AS(
        (void)heat_kernel_direct(spectral_model::unit(3), half, 1e-3,
                                 {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1e-12, 1e2),
        budget_exceeded);
}

TEST_CASE("shifted model damps the kernel by the exact exponential (r=1)") {
    rational_power one = rational_power::rational(1, 1);
    spectral_model shifted = spectral_model::unit(1, 0.8);
    for (double t : {0.3, 1.2}) {
        auto a = heat_kernel_direct(shifted, one, t, origin, origin, 1e-13);
        auto b = heat_kernel_direct(circle, one, t, origin, origin, 1e-13);
        CHECK(a.value == doctest::Approx(std::exp(-0.8 * t) * b.value).epsilon(1e-11));
    }
}
