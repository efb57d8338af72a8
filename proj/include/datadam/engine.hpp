#pragma once

#include <span>
#include <vector>

#include "datadam/scenario.hpp"

namespace datadam {

/// Aggregates of one run.
struct RunMetrics {
    double avg_storage = 0.0;       ///< mean of per-step storage
    double total_outflow = 0.0;     ///< sum of outflow_actual * dt (a volume)
    double total_spill = 0.0;
    double max_storage = 0.0;
    double time_at_capacity = 0.0;  ///< sum of dt over steps with S >= C - 1e-9
    double trajectory_cost = 0.0;

    bool operator==(const RunMetrics&) const = default;
};

struct RunResult {
    Scenario scenario;
    std::vector<StepRecord> records;  ///< one per step, length duration/dt
    RunMetrics metrics;
};

struct ComparisonDeltas {
    double avg_storage_delta = 0.0;   ///< optimized minus baseline
    double total_outflow_delta = 0.0;
    double spill_delta = 0.0;
    double cost_delta = 0.0;
};

struct ComparisonReport {
    RunMetrics optimized;
    RunMetrics baseline;
    ComparisonDeltas deltas;
};

struct ComparisonRuns {
    RunResult optimized;
    RunResult baseline;
};

/// Runs the scenario end to end: per step, sample inflow, ask the controller
/// for a commanded rate, advance the reservoir, record. Deterministic:
/// identical scenarios yield bit-identical results.
RunResult run(const Scenario& scenario);

/// Recomputes RunMetrics from a record sequence. Throws EmptyRecordError.
RunMetrics summarize(std::span<const StepRecord> records, const SystemParams& params);

/// Runs the scenario twice on identical inflow: once with the optimized
/// sluice, once with a baseline fixed at o_optimal. The scenario's own
/// controller field is ignored.
ComparisonRuns compare_runs(const Scenario& base_scenario);

/// compare_runs reduced to the two metric sets plus optimized-minus-baseline
/// deltas.
ComparisonReport compare(const Scenario& base_scenario);

} // namespace datadam
