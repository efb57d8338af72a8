#pragma once

#include <cstddef>

namespace datadam {

/// Storage term of the step cost. The default penalizes squared distance from
/// capacity; the optional hinge penalizes only storage above safe_level.
enum class StoragePenalty {
    quadratic_to_capacity,
    overflow_hinge,
};

/// All scalar constants of a run: physical limits, cost weights and the time
/// grid. Defaults match the reference configuration.
struct SystemParams {
    double capacity = 1000.0;           ///< maximum storage C, data units
    double o_max = 50.0;                ///< maximum outflow rate, units/time
    double processing = 100.0;          ///< downstream processing capacity P, units/time
    double bandwidth = 80.0;            ///< network bandwidth B, units/time
    double security_threshold = 50.0;   ///< storage reserve floor, data units
    double o_optimal = 40.0;            ///< target outflow rate, units/time
    double alpha = 100.0;               ///< weight on the storage cost term, per units^2
    double beta = 1.0;                  ///< weight on the outflow cost term, per (units/time)^2
    double duration = 200.0;            ///< simulated horizon T, time units
    double dt = 0.1;                    ///< time step, time units

    // Library-level switch, not part of the scenario file schema.
    StoragePenalty storage_penalty = StoragePenalty::quadratic_to_capacity;
    double safe_level = 1000.0;         ///< C_safe, only read in overflow_hinge mode

    /// Throws ValidationError naming the offending field.
    void validate() const;

    /// round(duration/dt); validate() guarantees the ratio is whole within 1e-9.
    std::size_t step_count() const;

    bool operator==(const SystemParams&) const = default;
};

/// Reservoir level at a point in time.
struct ReservoirState {
    double t = 0.0;
    double storage = 0.0;

    bool operator==(const ReservoirState&) const = default;
};

/// One integration step of a run, storage taken after the step.
struct StepRecord {
    double t = 0.0;
    double inflow = 0.0;
    double outflow_commanded = 0.0;
    double outflow_actual = 0.0;
    double storage = 0.0;
    double spill = 0.0;
    double step_cost = 0.0;

    bool operator==(const StepRecord&) const = default;
};

} // namespace datadam
