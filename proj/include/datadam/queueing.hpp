#pragma once

#include "datadam/engine.hpp"

namespace datadam {

/// Arrival and service rates of the downstream M/M/1 queue.
struct Mm1Params {
    double arrival_rate = 0.0;  ///< lambda, items/time
    double service_rate = 1.0;  ///< mu, items/time

    bool operator==(const Mm1Params&) const = default;
};

/// Steady-state M/M/1 quantities.
struct Mm1Metrics {
    double rho = 0.0;  ///< utilization lambda/mu
    double l = 0.0;    ///< mean items in system, L = lambda * W
    double w = 0.0;    ///< mean time in system, W = 1/(mu - lambda)
    double lq = 0.0;   ///< mean items in queue
    double wq = 0.0;   ///< mean wait in queue

    bool operator==(const Mm1Metrics&) const = default;
};

/// Analytic steady-state metrics. Little's identity L = lambda*W holds exactly
/// by construction. Throws InvalidRateError when mu <= 0 or lambda < 0,
/// InstabilityError when lambda >= mu.
Mm1Metrics mm1_metrics(const Mm1Params& params);

/// M/M/1 view of a completed run: lambda is the run's mean actual outflow, mu
/// the processing capacity. Throws EmptyRecordError for an empty run and
/// propagates the instability error when mean outflow >= processing.
Mm1Metrics downstream_report(const RunResult& run, const SystemParams& params);

} // namespace datadam
