#pragma once

#include <span>

#include "datadam/types.hpp"

namespace datadam {

struct StepOutcome {
    ReservoirState state;     ///< state after the step, t advanced by dt
    double outflow_actual;    ///< commanded rate limited by what the reservoir holds
    double spill;             ///< volume lost above capacity this step
};

/// Advances the reservoir one forward-Euler step. Outflow is limited to
/// storage/dt + inflow (the reservoir cannot drain below empty); storage above
/// capacity is recorded as spill and dropped. Mass balance holds per step:
/// inflow*dt == delta_storage + outflow_actual*dt + spill.
///
/// Throws InvalidRateError for negative rates, CorruptStateError when
/// state.storage is outside [0, capacity].
StepOutcome step_reservoir(const ReservoirState& state, double inflow,
                           double outflow_commanded, const SystemParams& params);

/// Conservation audit over a record sequence produced by consecutive steps:
/// |sum(inflow*dt) - (final storage - initial storage) - sum(outflow*dt) - sum(spill)|.
/// At most 1e-6 per 10,000 steps for any valid run. Throws EmptyRecordError.
double mass_balance_residual(std::span<const StepRecord> records,
                             double initial_storage, double dt);

} // namespace datadam
