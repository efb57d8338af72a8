#include "datadam/engine.hpp"

#include <algorithm>

#include "datadam/errors.hpp"
#include "datadam/reservoir.hpp"

namespace datadam {

RunResult run(const Scenario& scenario) {
    scenario.validate();
    const SystemParams& p = scenario.params;
    const std::size_t steps = p.step_count();

    RunResult result;
    result.scenario = scenario;
    result.records.reserve(steps);

    ReservoirState state{0.0, scenario.initial_storage};
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * p.dt;
        const double inflow = inflow_at(scenario.inflow, t, i);
        const double commanded = controller_outflow(scenario.controller, state, inflow, p);
        const StepOutcome step = step_reservoir(state, inflow, commanded, p);
        result.records.push_back({t, inflow, commanded, step.outflow_actual,
                                  step.state.storage, step.spill,
                                  step_cost(step.state.storage, step.outflow_actual, p)});
        state = step.state;
    }

    result.metrics = summarize(result.records, p);
    return result;
}

RunMetrics summarize(std::span<const StepRecord> records, const SystemParams& params) {
    if (records.empty())
        throw EmptyRecordError("summarize: no records");

    RunMetrics m;
    double storage_sum = 0.0;
    for (const StepRecord& r : records) {
        storage_sum += r.storage;
        m.total_outflow += r.outflow_actual * params.dt;
        m.total_spill += r.spill;
        m.max_storage = std::max(m.max_storage, r.storage);
        if (r.storage >= params.capacity - 1e-9) m.time_at_capacity += params.dt;
    }
    m.avg_storage = storage_sum / static_cast<double>(records.size());
    m.trajectory_cost = trajectory_cost(records, params);
    return m;
}

ComparisonRuns compare_runs(const Scenario& base_scenario) {
    Scenario optimized = base_scenario;
    optimized.controller = OptimizedSluice{};

    Scenario baseline = base_scenario;
    baseline.controller = BaselineSluice{base_scenario.params.o_optimal};

    return {run(optimized), run(baseline)};
}

ComparisonReport compare(const Scenario& base_scenario) {
    const ComparisonRuns runs = compare_runs(base_scenario);
    const RunMetrics& o = runs.optimized.metrics;
    const RunMetrics& b = runs.baseline.metrics;
    return {o, b,
            {o.avg_storage - b.avg_storage, o.total_outflow - b.total_outflow,
             o.total_spill - b.total_spill, o.trajectory_cost - b.trajectory_cost}};
}

} // namespace datadam
