#include <doctest.h>

#include <fracheat/models.hpp>

#include "oracles.hpp"

using namespace fracheat;

TEST_CASE("model construction validates input") {
    CHECK_THROWS_AS(spectral_model::make(0, {}, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(spectral_model::make(2, {1.0}, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(spectral_model::make(1, {-1.0}, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(spectral_model::make(1, {1.0}, -0.5), invalid_argument_error);
    CHECK(spectral_model::unit(3).volume() ==
          doctest::Approx(std::pow(2.0 * oracles::pi, 3)).epsilon(1e-15));
}

TEST_CASE("kernel projection density") {
    CHECK(kernel_projection_density(spectral_model::unit(1)) ==
          doctest::Approx(1.0 / (2.0 * oracles::pi)));
    CHECK(kernel_projection_density(spectral_model::unit(1, 0.3)) == 0.0);
}

TEST_CASE("heat coefficients of the shifted flat model") {
    auto a = heat_coefficients(spectral_model::unit(2, 1.5), 3);
    double a0 = 1.0 / (4.0 * oracles::pi);
    CHECK(a.at(0) == doctest::Approx(a0));
    CHECK(a.at(1) == doctest::Approx(-1.5 * a0));
    CHECK(a.at(2) == doctest::Approx(1.5 * 1.5 / 2.0 * a0));
    CHECK(a.at(3) == doctest::Approx(-std::pow(1.5, 3) / 6.0 * a0));
    CHECK_THROWS_AS(a.at(9), invalid_argument_error);
}

TEST_CASE("eigenvalue enumeration on the unit circle") {
    auto list = enumerate_eigenvalues(spectral_model::unit(1), 10.0);
    REQUIRE(list.entries.size() == 4); // 0, 1, 4, 9
    CHECK(list.entries[0].first == 0.0);
    CHECK(list.entries[0].second == 1);
    for (int i = 1; i <= 3; ++i) {
        CHECK(list.entries[i].first == doctest::Approx(double(i * i)));
        CHECK(list.entries[i].second == 2);
    }
}

TEST_CASE("enumeration honors the lattice budget") {
    CHECK_THROWS_AS(enumerate_eigenvalues(spectral_model::unit(3), 1e8, 1.0, 1.0, 1e3),
                    cutoff_too_large);
}

TEST_CASE("torus distance wraps around") {
    spectral_model m = spectral_model::unit(1);
    CHECK(torus_distance(m, {0.1}, {2.0 * oracles::pi - 0.1}) == doctest::Approx(0.2));
    spectral_model m2 = spectral_model::make(2, {1.0, 2.0}, 0.0);
    CHECK(torus_distance(m2, {0.0, 0.0}, {oracles::pi, 0.0}) == doctest::Approx(oracles::pi));
}
