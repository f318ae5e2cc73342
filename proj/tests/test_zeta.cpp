#include <doctest.h>

#include <fracheat/zeta.hpp>

#include "oracles.hpp"

using namespace fracheat;

TEST_CASE("convergent region values match direct sums") {
    // zeta_1(2) = 2 zeta_R(4) = pi^4 / 45
    auto z = epstein_zeta(spectral_model::unit(1), cplx{2.0, 0.0});
    CHECK(z.value.real() ==
          doctest::Approx(std::pow(oracles::pi, 4) / 45.0).epsilon(1e-12));
    CHECK(std::abs(z.value.imag()) < 1e-12);
    CHECK(!z.is_pole);
    // zeta_1(3) = 2 zeta_R(6)
    auto z3 = epstein_zeta(spectral_model::unit(1), cplx{3.0, 0.0});
    CHECK(z3.value.real() ==
          doctest::Approx(2.0 * oracles::riemann_zeta(6.0)).epsilon(1e-12));
}

TEST_CASE("trivial zeros and special negative values") {
    auto m = spectral_model::unit(1);
    for (int k = 1; k <= 4; ++k)
        CHECK(std::abs(epstein_zeta(m, cplx{-double(k), 0.0}).value) < 1e-9);
    // zeta_1(-1/2) = 2 zeta_R(-1) = -1/6
    auto zm = epstein_zeta(m, cplx{-0.5, 0.0});
    CHECK(zm.value.real() == doctest::Approx(-1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("pole at s = n/2 reported with the theta residue") {
    for (int n : {1, 2, 3}) {
        auto z = epstein_zeta(spectral_model::unit(n), cplx{0.5 * n, 0.0});
        CHECK(z.is_pole);
        double target = std::pow(oracles::pi, 0.5 * n) / std::tgamma(0.5 * n);
        CHECK(z.residue.real() == doctest::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("near-pole evaluations switch to Laurent mode") {
    auto z = epstein_zeta(spectral_model::unit(1), cplx{0.5 + 1e-8, 0.0});
    CHECK(z.near_pole);
}

TEST_CASE("off-diagonal kernel closed forms on the circle") {
    spectral_model m = spectral_model::unit(1);
    std::vector<double> x{0.0};
    // kernel of the half power (argument -1/2 in the lambda^{-s} convention):
    // Abel-summation closed form
    for (double phi : {oracles::pi, oracles::pi / 2.0, 1.0}) {
        auto q = q_kernel_offdiag(m, cplx{-0.5, 0.0}, x, {phi});
        CHECK(q.value.real() == doctest::Approx(oracles::abel_q_half(phi)).epsilon(1e-9));
    }
    // q_1 at phi = pi: (1/pi) sum (-1)^k / k^2 = -pi/12
    auto q1 = q_kernel_offdiag(m, cplx{1.0, 0.0}, x, {oracles::pi});
    CHECK(q1.value.real() == doctest::Approx(-oracles::pi / 12.0).epsilon(1e-10));
    // entirety: vanishing at negative integers
    auto qn = q_kernel_offdiag(m, cplx{-2.0, 0.0}, x, {1.3});
    CHECK(std::abs(qn.value) < 1e-9);
}

TEST_CASE("shifted zeta derivative identity") {
    spectral_model m1 = spectral_model::unit(1, 1.0);
    CHECK(zeta_shift_derivative_check(m1, cplx{3.0, 0.0}, 1.0, 1e-4) < 1e-6);
    spectral_model m2 = spectral_model::unit(2, 0.5);
    CHECK(zeta_shift_derivative_check(m2, cplx{4.0, 0.0}, 0.5, 1e-4) < 1e-6);
    // s = 0: the right-hand side carries an explicit factor of s
    CHECK(zeta_shift_derivative_check(m1, cplx{0.0, 0.0}, 1.0, 1e-4) < 1e-6);
}

TEST_CASE("nontriviality scan rejects integer r*j") {
    CHECK_THROWS_AS(nontriviality_scan(1, {1.0}, {1.0}, rational_power::rational(1, 2), 2),
                    invalid_argument_error);
    auto rep = nontriviality_scan(1, {1.0}, {0.5, 1.0, 2.0},
                                  rational_power::rational(1, 2), 1);
    CHECK(rep.all_nonzero);
    CHECK(rep.min_abs > 0.0);
}
