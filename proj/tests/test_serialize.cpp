#include <doctest.h>

#include <fracheat/serialize.hpp>

#include <sstream>

using namespace fracheat;

TEST_CASE("fmt17 keeps 17 significant digits and round-trips") {
    for (double v : {1.0 / 3.0, 3.141592653589793, 1e-17, -2.5e300}) {
        std::string s = fmt17(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(fmt17(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("model JSON round trip") {
    spectral_model m = spectral_model::make(2, {1.0, 2.5}, 0.3);
    auto j = model_to_json(m);
    spectral_model back = model_from_json(j);
    CHECK(back.n == m.n);
    CHECK(back.radii == m.radii);
    CHECK(back.shift == m.shift);
}

TEST_CASE("sample CSV round trip with mandatory header") {
    std::vector<kernel_sample> samples;
    kernel_sample s;
    s.t = 0.125;
    s.value = 1.0 / 7.0;
    s.error_bound = 1e-12;
    s.method = kernel_method::eigensum;
    samples.push_back(s);
    std::string csv = samples_to_csv(samples);
    CHECK(csv.rfind("t,value,error_bound,method\n", 0) == 0);
    std::istringstream in(csv);
    sample_grid g = samples_from_csv(in);
    REQUIRE(g.points.size() == 1);
    CHECK(g.points[0].t == 0.125);
    CHECK(g.points[0].value == 1.0 / 7.0);
    CHECK(g.points[0].error_bound == 1e-12);
}

TEST_CASE("serialization is deterministic") {
    spectral_model m = spectral_model::make(3, {1.0, 1.0, 2.0}, 0.7);
    CHECK(model_to_json(m).dump() == model_to_json(m).dump());
}
