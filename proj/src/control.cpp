#include "datadam/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "datadam/errors.hpp"

namespace datadam {

namespace {

// One-step objective: step_cost evaluated at the unclamped projected storage.
double projected_cost(const ReservoirState& state, double inflow, double outflow,
                      const SystemParams& p) {
    const double projected = state.storage + (inflow - outflow) * p.dt;
    return step_cost(projected, outflow, p);
}

} // namespace

FeasibleBounds feasible_bounds(const ReservoirState& state, double inflow,
                               const SystemParams& params) {
    const double availability =
        std::max(0.0, (state.storage - params.security_threshold) / params.dt + inflow);
    const double hi = std::min(std::min(params.o_max, params.processing),
                               std::min(params.bandwidth, availability));
    return {0.0, hi};
}

double baseline_outflow(const BaselineSluice& spec, const FeasibleBounds& bounds) {
    return std::clamp(spec.rate, bounds.lo, bounds.hi);
}

double capped_outflow(const ReservoirState& state, double inflow,
                      const SystemParams& params) {
    return feasible_bounds(state, inflow, params).hi;
}

double step_cost(double storage, double outflow, const SystemParams& params) {
    double storage_residual;
    if (params.storage_penalty == StoragePenalty::overflow_hinge) {
        storage_residual = std::max(0.0, storage - params.safe_level);
    } else {
        storage_residual = storage - params.capacity;
    }
    const double outflow_residual = outflow - params.o_optimal;
    return params.alpha * storage_residual * storage_residual +
           params.beta * outflow_residual * outflow_residual;
}

double trajectory_cost(std::span<const StepRecord> records, const SystemParams& params) {
    if (records.empty())
        throw EmptyRecordError("trajectory_cost: no records");
    double total = 0.0;
    for (const StepRecord& r : records) {
        total += step_cost(r.storage, r.outflow_actual, params) * params.dt;
    }
    return total;
}

double optimized_outflow(const ReservoirState& state, double inflow,
                         const SystemParams& params) {
    const double denom = params.alpha * params.dt * params.dt + params.beta;
    if (!(denom > 0.0))
        throw DegenerateWeightsError("alpha*dt^2 + beta must be positive");

    const FeasibleBounds bounds = feasible_bounds(state, inflow, params);

    double target = params.capacity;
    if (params.storage_penalty == StoragePenalty::overflow_hinge) {
        // Below the hinge the storage term vanishes and o_optimal is exact.
        const double projected_at_optimal =
            state.storage + (inflow - params.o_optimal) * params.dt;
        if (projected_at_optimal <= params.safe_level)
            return std::clamp(params.o_optimal, bounds.lo, bounds.hi);
        target = params.safe_level;
    }

    const double minimizer =
        (params.alpha * params.dt * (state.storage + inflow * params.dt - target) +
         params.beta * params.o_optimal) /
        denom;
    return std::clamp(minimizer, bounds.lo, bounds.hi);
}

double grid_search_outflow(const ReservoirState& state, double inflow,
                           const SystemParams& params, std::size_t resolution) {
    if (resolution < 2)
        throw ValidationError("resolution", "must be at least 2");

    const FeasibleBounds bounds = feasible_bounds(state, inflow, params);
    if (!(bounds.hi > bounds.lo)) return bounds.lo;

    const double span = bounds.hi - bounds.lo;
    const double steps = static_cast<double>(resolution - 1);
    double best = bounds.lo;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < resolution; ++k) {
        const double candidate = bounds.lo + span * (static_cast<double>(k) / steps);
        const double cost = projected_cost(state, inflow, candidate, params);
        if (cost < best_cost) {
            best_cost = cost;
            best = candidate;
        }
    }
    return best;
}

double controller_outflow(const ControllerSpec& spec, const ReservoirState& state,
                          double inflow, const SystemParams& params) {
    return std::visit(
        [&](const auto& policy) -> double {
            using T = std::decay_t<decltype(policy)>;
            if constexpr (std::is_same_v<T, BaselineSluice>) {
                return baseline_outflow(policy, feasible_bounds(state, inflow, params));
            } else if constexpr (std::is_same_v<T, CappedSluice>) {
                return capped_outflow(state, inflow, params);
            } else {
                return optimized_outflow(state, inflow, params);
            }
        },
        spec);
}

} // namespace datadam
