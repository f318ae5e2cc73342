#include <doctest.h>

#include <fracheat/asym.hpp>

#include "oracles.hpp"

#include <algorithm>

using namespace fracheat;

namespace {
bool has_term(const expansion_template& t, double e, int lp) {
    return std::any_of(t.terms.begin(), t.terms.end(), [&](const expansion_term& x) {
        return std::abs(x.exponent - e) < 1e-12 && x.log_power == lp;
    });
}
} // namespace

TEST_CASE("template: n=1, r=1/2 (log case)") {
    auto t = predict_exponents(1, rational_power::rational(1, 2), 4.0);
    CHECK(t.kind == expansion_case::odd_log);
    CHECK(has_term(t, -1.0, 0));
    CHECK(has_term(t, 1.0, 0));
    CHECK(has_term(t, 1.0, 1));
    CHECK(has_term(t, 3.0, 0));
    CHECK(has_term(t, 3.0, 1));
    CHECK(!has_term(t, 2.0, 0)); // no even powers
    CHECK(!has_term(t, 4.0, 0));
}

TEST_CASE("template: n=2, r=1/2 (even case)") {
    auto t = predict_exponents(2, rational_power::rational(1, 2), 3.0);
    CHECK(t.kind == expansion_case::even);
    CHECK(has_term(t, -2.0, 0));
    CHECK(has_term(t, 0.0, 0));
    for (double e : {1.0, 2.0, 3.0}) CHECK(has_term(t, e, 0));
    for (auto& term : t.terms) CHECK(term.log_power == 0);
}

TEST_CASE("template: n=1, r=1/3 (plain odd case, no logs)") {
    auto t = predict_exponents(1, rational_power::rational(1, 3), 5.0);
    CHECK(t.kind == expansion_case::odd_plain);
    CHECK(has_term(t, -1.5, 0));
    for (double e : {1.0, 2.0, 4.0, 5.0}) CHECK(has_term(t, e, 0));
    CHECK(!has_term(t, 3.0, 0)); // multiples of beta drop out
    CHECK(has_term(t, 4.5, 0));  // (2j+1)/(2r) half-ladder
    for (auto& term : t.terms) CHECK(term.log_power == 0);
}

TEST_CASE("finite part extraction") {
    auto g0 = finite_part([](cplx s) { return gamma(s); }, cplx{0.0, 0.0});
    CHECK(g0.finite_part.real() == doctest::Approx(-euler_gamma).epsilon(1e-10));
    CHECK(g0.residue.real() == doctest::Approx(1.0).epsilon(1e-10));

    auto synth = finite_part([](cplx s) { return 1.0 / (s - cplx{2.0, 0.0}) + 5.0; },
                             cplx{2.0, 0.0});
    CHECK(synth.finite_part.real() == doctest::Approx(5.0).epsilon(1e-10));

    // regular point: finite part equals the value
    auto reg = finite_part([](cplx s) { return gamma_ratio(s, 0.5); }, cplx{-2.0, 0.0});
    CHECK(reg.finite_part.real() == doctest::Approx(-0.25).epsilon(1e-9));
    CHECK(std::abs(reg.residue) < 1e-9);
}

TEST_CASE("predicted coefficients: unshifted circle, r=1/2") {
    spectral_model m = spectral_model::unit(1);
    rational_power r = rational_power::rational(1, 2);
    auto tmpl = predict_exponents(1, r, 3.0);
    auto rep = predict_coefficients(m, r, tmpl);
    for (auto& row : rep.rows) {
        if (row.term.log_power == 1) {
            CHECK(std::abs(row.predicted) < 1e-12); // a_j = 0 for j >= 1
        } else if (row.term.exponent == -1.0) {
            CHECK(row.predicted == doctest::Approx(1.0 / oracles::pi).epsilon(1e-10));
        } else if (row.term.exponent == 1.0) {
            // Laurent oracle: coth(t/2)/(2 pi) = 1/(pi t) + t/(12 pi) - ...
            CHECK(row.predicted ==
                  doctest::Approx(1.0 / (12.0 * oracles::pi)).epsilon(1e-9));
        } else if (row.term.exponent == 3.0) {
            CHECK(row.predicted ==
                  doctest::Approx(-1.0 / (720.0 * oracles::pi)).epsilon(1e-8));
        }
    }
}

TEST_CASE("predicted t log t coefficient: shifted circle, r=1/2") {
    spectral_model m = spectral_model::unit(1, 1.0);
    rational_power r = rational_power::rational(1, 2);
    auto tmpl = predict_exponents(1, r, 1.0);
    auto rep = predict_coefficients(m, r, tmpl);
    // frozen from an independent 40-digit eigensum fit: +1/(2 pi)
    bool found = false;
    for (auto& row : rep.rows)
        if (row.term.log_power == 1 && row.term.exponent == 1.0) {
            found = true;
            CHECK(row.predicted ==
                  doctest::Approx(1.0 / (2.0 * oracles::pi)).epsilon(1e-10));
        }
    CHECK(found);
}

TEST_CASE("off-diagonal Taylor prediction vanishes at multiples of beta") {
    spectral_model m = spectral_model::unit(1);
    rational_power r = rational_power::rational(1, 2);
    auto rep = offdiag_taylor_prediction(m, r, {0.0}, {oracles::pi / 2.0}, 4);
    for (auto& row : rep.rows) {
        long long j = row.term.j;
        if (j >= 1 && j % 2 == 0) CHECK(std::abs(row.predicted) < 1e-9);
        if (j == 1)
            CHECK(row.predicted ==
                  doctest::Approx(1.0 / (2.0 * oracles::pi)).epsilon(1e-9));
    }
}

TEST_CASE("even-case identity") {
    spectral_model m = spectral_model::unit(2, 1.0);
    CHECK(even_case_identity_check(m, rational_power::rational(1, 2), 1) < 1e-8);
    CHECK(even_case_identity_check(m, rational_power::rational(1, 3), 1) < 1e-8);
}
