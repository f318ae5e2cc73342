#include <doctest.h>

#include <fracheat/fit.hpp>

#include "oracles.hpp"

using namespace fracheat;

namespace {
expansion_template make_template(std::vector<std::pair<double, int>> terms) {
    expansion_template t;
    for (auto& [e, lp] : terms) {
        expansion_term term;
        term.exponent = e;
        term.log_power = lp;
        t.terms.push_back(term);
    }
    return t;
}
} // namespace

TEST_CASE("geometric grid construction") {
    auto g = geometric_grid(0.01, 1.0, 2.0);
    REQUIRE(g.points.size() >= 7);
    CHECK(g.points.front().t == doctest::Approx(0.01));
    CHECK(g.points.back().t <= 1.0 + 1e-12);
    for (size_t i = 1; i < g.points.size(); ++i)
        CHECK(g.points[i].t / g.points[i - 1].t == doctest::Approx(2.0));
}

TEST_CASE("exact recovery of synthetic coefficients") {
    auto tmpl = make_template({{-1.0, 0}, {0.0, 0}, {1.0, 0}, {1.0, 1}, {2.0, 0}});
    std::vector<double> c{0.7, -1.2, 2.0, 0.31, -4.0};
    sample_grid g;
    for (double t = 0.005; t < 0.6; t *= 1.17) {
        double v = c[0] / t + c[1] + c[2] * t + c[3] * t * std::log(t) + c[4] * t * t;
        g.points.push_back({t, v, 1e-14});
    }
    auto fr = fit_expansion(g, tmpl);
    for (size_t k = 0; k < c.size(); ++k)
        CHECK(fr.coefficients[k] == doctest::Approx(c[k]).epsilon(1e-9));
    CHECK(fr.condition_number < 1e12);
}

TEST_CASE("insufficient samples raise") {
    auto tmpl = make_template({{0.0, 0}, {1.0, 0}, {2.0, 0}});
    sample_grid g;
    g.points = {{0.1, 1.0, 1e-12}, {0.2, 1.1, 1e-12}, {0.3, 1.2, 1e-12}};
    CHECK_THROWS_AS((void)fit_expansion(g, tmpl), insufficient_samples);
}

TEST_CASE("log columns demand an adequate t range") {
    auto tmpl = make_template({{1.0, 0}, {1.0, 1}});
    sample_grid g;
    for (double t = 0.10; t <= 0.2; t += 0.01)
        g.points.push_back({t, t + t * std::log(t), 1e-12});
    CHECK_THROWS_AS((void)fit_expansion(g, tmpl), invalid_argument_error);
}

TEST_CASE("compare merges predictions and verdicts") {
    auto tmpl = make_template({{0.0, 0}, {1.0, 0}});
    coefficient_report pred;
    pred.tmpl = tmpl;
    for (auto& term : tmpl.terms) {
        coefficient_row row;
        row.term = term;
        row.predicted = term.exponent == 0.0 ? 2.0 : 5.0;
        pred.rows.push_back(row);
    }
    fit_result fr;
    fr.tmpl = tmpl;
    fr.coefficients = {2.0 + 1e-6, 5.5}; // second is off by 10%
    fr.std_errors = {0.0, 0.0};
    auto merged = compare(pred, fr, 1e-3, 1e-9);
    CHECK(merged.rows[0].pass);
    CHECK(!merged.rows[1].pass);
    CHECK(!merged.all_pass);
}
