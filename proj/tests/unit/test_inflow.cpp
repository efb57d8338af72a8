#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "datadam/errors.hpp"
#include "datadam/inflow.hpp"
#include "datadam/scenario.hpp"

using namespace datadam;

namespace {

InflowSpec plain_sinusoid() {
    InflowSpec spec;
    spec.base = 40.0;
    spec.amplitude = 10.0;
    spec.period = 25.0;
    return spec;
}

} // namespace

TEST_CASE("inflow_at: sinusoid anchors") {
    const auto spec = plain_sinusoid();
    CHECK(inflow_at(spec, 0.0, 0) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(inflow_at(spec, 6.25, 62) == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("inflow_at: spike boost applies inside [start, end)") {
    auto spec = plain_sinusoid();
    spec.spikes.push_back({50.0, 100.0, 30.0});
    CHECK(inflow_at(spec, 75.0, 750) == doctest::Approx(70.0).epsilon(1e-12));
    CHECK(inflow_at(spec, 50.0, 500) == doctest::Approx(70.0).epsilon(1e-12));
    // end is exclusive: t = 100 is back on the plain sinusoid
    CHECK(inflow_at(spec, 100.0, 1000) == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(inflow_at(spec, 49.99, 499) < 60.0);
}

TEST_CASE("inflow_at: never negative") {
    InflowSpec spec;
    spec.base = 5.0;
    spec.amplitude = 5.0;
    spec.period = 10.0;
    spec.noise_std = 30.0;
    spec.seed = 7;
    for (std::uint64_t i = 0; i < 5000; ++i) {
        CHECK(inflow_at(spec, 0.01 * static_cast<double>(i), i) >= 0.0);
    }
}

TEST_CASE("inflow_at: periodic outside spike windows") {
    auto spec = plain_sinusoid();
    spec.spikes.push_back({50.0, 100.0, 30.0});
    for (double t : {0.0, 3.7, 11.2, 24.9, 101.3, 110.0}) {
        if ((50.0 <= t && t < 100.0) || (50.0 <= t + 25.0 && t + 25.0 < 100.0)) continue;
        CHECK(inflow_at(spec, t, 0) ==
              doctest::Approx(inflow_at(spec, t + 25.0, 0)).epsilon(1e-9));
    }
}

TEST_CASE("inflow_at: noise is deterministic and order-independent") {
    auto spec = plain_sinusoid();
    spec.noise_std = 4.0;
    spec.seed = 42;

    std::vector<double> forward;
    for (std::uint64_t i = 0; i < 500; ++i) {
        forward.push_back(inflow_at(spec, 0.1 * static_cast<double>(i), i));
    }

    std::vector<std::uint64_t> order(500);
    for (std::uint64_t i = 0; i < 500; ++i) order[i] = i;
    std::mt19937_64 rng(99);
    std::shuffle(order.begin(), order.end(), rng);

    for (std::uint64_t i : order) {
        const double again = inflow_at(spec, 0.1 * static_cast<double>(i), i);
        CHECK(again == forward[i]);  // bit-identical
    }

    spec.seed = 43;
    bool any_difference = false;
    for (std::uint64_t i = 0; i < 500; ++i) {
        if (inflow_at(spec, 0.1 * static_cast<double>(i), i) != forward[i]) any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("InflowSpec::validate") {
    auto spec = plain_sinusoid();
    CHECK_NOTHROW(spec.validate());

    spec.amplitude = spec.base + 1.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);

    spec = plain_sinusoid();
    spec.period = 0.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);

    spec = plain_sinusoid();
    spec.noise_std = -1.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);

    spec = plain_sinusoid();
    spec.spikes.push_back({10.0, 10.0, 5.0});
    CHECK_THROWS_AS(spec.validate(), ValidationError);

    spec = plain_sinusoid();
    spec.spikes.push_back({10.0, 20.0, -5.0});
    CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("make_reference_scenario carries the reference constants") {
    const Scenario s = make_reference_scenario();
    CHECK(s.params.capacity == 1000.0);
    CHECK(s.params.o_max == 50.0);
    CHECK(s.params.processing == 100.0);
    CHECK(s.params.bandwidth == 80.0);
    CHECK(s.params.security_threshold == 50.0);
    CHECK(s.params.o_optimal == 40.0);
    CHECK(s.params.duration == 200.0);
    CHECK(s.params.dt == 0.1);
    CHECK(s.params.step_count() == 2000);
    CHECK(s.initial_storage == 0.0);
    CHECK(s.inflow.noise_std == 0.0);
    REQUIRE(s.inflow.spikes.size() == 2);
    CHECK(s.inflow.spikes[0].start == 50.0);
    CHECK(s.inflow.spikes[0].end == 100.0);
    CHECK(s.inflow.spikes[1].start == 130.0);
    CHECK(s.inflow.spikes[1].end == 160.0);
    CHECK_NOTHROW(s.validate());
}
