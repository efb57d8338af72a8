#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include "datadam/types.hpp"

namespace datadam {

/// Constant commanded rate, clamped only by feasibility.
struct BaselineSluice {
    double rate = 0.0;

    bool operator==(const BaselineSluice&) const = default;
};

/// Greedy release at the feasibility cap.
struct CappedSluice {
    bool operator==(const CappedSluice&) const = default;
};

/// One-step quadratic-cost minimizer; reads alpha, beta, o_optimal from the
/// run's SystemParams.
struct OptimizedSluice {
    bool operator==(const OptimizedSluice&) const = default;
};

using ControllerSpec = std::variant<BaselineSluice, CappedSluice, OptimizedSluice>;

struct FeasibleBounds {
    double lo = 0.0;
    double hi = 0.0;
};

/// lo = 0; hi = min(o_max, processing, bandwidth, availability), where
/// availability = max(0, (storage - security_threshold)/dt + inflow) keeps
/// outflow from breaching the security reserve floor.
FeasibleBounds feasible_bounds(const ReservoirState& state, double inflow,
                               const SystemParams& params);

/// clamp(rate, lo, hi).
double baseline_outflow(const BaselineSluice& spec, const FeasibleBounds& bounds);

/// Releases everything feasible; equals feasible_bounds(...).hi.
double capped_outflow(const ReservoirState& state, double inflow,
                      const SystemParams& params);

/// Cost rate at one instant: alpha*(storage - capacity)^2 +
/// beta*(outflow - o_optimal)^2, or the hinge variant when selected.
double step_cost(double storage, double outflow, const SystemParams& params);

/// Left Riemann sum of step_cost over a run. Throws EmptyRecordError.
double trajectory_cost(std::span<const StepRecord> records, const SystemParams& params);

/// Closed-form minimizer of the one-step objective
/// alpha*(S + (I - O)*dt - C)^2 + beta*(O - o_optimal)^2 projected onto the
/// feasible bounds. Throws DegenerateWeightsError when alpha*dt^2 + beta == 0.
double optimized_outflow(const ReservoirState& state, double inflow,
                         const SystemParams& params);

/// Brute-force oracle for optimized_outflow: evaluates the one-step objective
/// at `resolution` evenly spaced points on [lo, hi], returns the argmin
/// (lowest index on ties). An empty feasible interval collapses to lo.
double grid_search_outflow(const ReservoirState& state, double inflow,
                           const SystemParams& params, std::size_t resolution);

/// Dispatches to the policy selected by `spec`.
double controller_outflow(const ControllerSpec& spec, const ReservoirState& state,
                          double inflow, const SystemParams& params);

} // namespace datadam
