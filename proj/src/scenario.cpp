#include "datadam/scenario.hpp"

#include <cmath>

#include "datadam/errors.hpp"

namespace datadam {

void Scenario::validate() const {
    params.validate();
    inflow.validate();
    if (!std::isfinite(initial_storage) || initial_storage < 0.0 ||
        initial_storage > params.capacity)
        throw ValidationError("initial_storage", "must be in [0, capacity]");
    if (const auto* baseline = std::get_if<BaselineSluice>(&controller)) {
        if (!std::isfinite(baseline->rate) || baseline->rate < 0.0)
            throw ValidationError("controller.rate", "must be nonnegative");
    }
}

Scenario make_reference_scenario() {
    Scenario scenario;
    scenario.params = SystemParams{};  // defaults carry the reference constants
    scenario.inflow = InflowSpec{
        .base = 44.0,
        .amplitude = 10.0,
        .period = 25.0,
        .spikes = {{50.0, 100.0, 30.0}, {130.0, 160.0, 30.0}},
        .noise_std = 0.0,
        .seed = 0,
    };
    scenario.controller = OptimizedSluice{};
    scenario.initial_storage = 0.0;
    return scenario;
}

} // namespace datadam
