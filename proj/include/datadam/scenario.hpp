#pragma once

#include "datadam/control.hpp"
#include "datadam/inflow.hpp"
#include "datadam/types.hpp"

namespace datadam {

/// Everything needed to reproduce a run.
struct Scenario {
    SystemParams params;
    InflowSpec inflow;
    ControllerSpec controller = OptimizedSluice{};
    double initial_storage = 0.0;

    /// Throws ValidationError naming the offending field.
    void validate() const;

    bool operator==(const Scenario&) const = default;
};

/// The bundled reference configuration: capacity 1000, o_max 50, processing
/// 100, bandwidth 80, security threshold 50, o_optimal 40, T = 200, dt = 0.1;
/// sinusoidal inflow (base 44, amplitude 10, period 25) with spike windows
/// [50,100) and [130,160) boosted by 30; calibrated weights alpha = 100,
/// beta = 1; reservoir starts empty.
Scenario make_reference_scenario();

} // namespace datadam
