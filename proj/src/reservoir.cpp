#include "datadam/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "datadam/errors.hpp"

namespace datadam {

namespace {

bool finite(double x) { return std::isfinite(x); }

void require_whole_step_ratio(double duration, double dt) {
    const double ratio = duration / dt;
    const double rounded = std::round(ratio);
    if (!(std::abs(ratio - rounded) <= 1e-9) || rounded < 1.0) {
        throw ValidationError("duration", "must be a whole number of dt steps");
    }
}

} // namespace

void SystemParams::validate() const {
    if (!finite(capacity) || capacity <= 0.0)
        throw ValidationError("capacity", "must be positive");
    if (!finite(o_max) || o_max <= 0.0)
        throw ValidationError("o_max", "must be positive");
    if (!finite(processing) || processing <= 0.0)
        throw ValidationError("processing", "must be positive");
    if (!finite(bandwidth) || bandwidth <= 0.0)
        throw ValidationError("bandwidth", "must be positive");
    if (!finite(dt) || dt <= 0.0)
        throw ValidationError("dt", "must be positive");
    if (!finite(duration) || duration <= 0.0)
        throw ValidationError("duration", "must be positive");
    require_whole_step_ratio(duration, dt);
    if (!finite(security_threshold) || security_threshold < 0.0 || security_threshold >= capacity)
        throw ValidationError("security_threshold", "must be in [0, capacity)");
    if (!finite(o_optimal) || o_optimal < 0.0 || o_optimal > o_max)
        throw ValidationError("o_optimal", "must be in [0, o_max]");
    if (!finite(alpha) || alpha < 0.0)
        throw ValidationError("alpha", "must be nonnegative");
    if (!finite(beta) || beta < 0.0)
        throw ValidationError("beta", "must be nonnegative");
    if (alpha + beta <= 0.0)
        throw ValidationError("alpha", "alpha + beta must be positive");
    if (storage_penalty == StoragePenalty::overflow_hinge &&
        (!finite(safe_level) || safe_level <= 0.0 || safe_level > capacity))
        throw ValidationError("safe_level", "must be in (0, capacity]");
}

std::size_t SystemParams::step_count() const {
    return static_cast<std::size_t>(std::llround(duration / dt));
}

StepOutcome step_reservoir(const ReservoirState& state, double inflow,
                           double outflow_commanded, const SystemParams& params) {
    if (!finite(inflow) || inflow < 0.0)
        throw InvalidRateError("inflow must be nonnegative, got " + std::to_string(inflow));
    if (!finite(outflow_commanded) || outflow_commanded < 0.0)
        throw InvalidRateError("outflow_commanded must be nonnegative, got " +
                               std::to_string(outflow_commanded));
    if (!finite(state.storage) || state.storage < 0.0 || state.storage > params.capacity)
        throw CorruptStateError("storage " + std::to_string(state.storage) +
                                " outside [0, " + std::to_string(params.capacity) + "]");

    // The reservoir cannot release more than it holds plus what arrives.
    const double drainable = state.storage / params.dt + inflow;
    const double outflow_actual = std::min(outflow_commanded, drainable);

    const double unclamped = state.storage + (inflow - outflow_actual) * params.dt;
    const double spill = std::max(0.0, unclamped - params.capacity);
    const double storage = std::clamp(unclamped, 0.0, params.capacity);

    return {ReservoirState{state.t + params.dt, storage}, outflow_actual, spill};
}

double mass_balance_residual(std::span<const StepRecord> records,
                             double initial_storage, double dt) {
    if (records.empty())
        throw EmptyRecordError("mass_balance_residual: no records");

    double inflow_volume = 0.0;
    double outflow_volume = 0.0;
    double spilled = 0.0;
    for (const StepRecord& r : records) {
        inflow_volume += r.inflow * dt;
        outflow_volume += r.outflow_actual * dt;
        spilled += r.spill;
    }
    const double delta_storage = records.back().storage - initial_storage;
    return std::abs(inflow_volume - delta_storage - outflow_volume - spilled);
}

} // namespace datadam
