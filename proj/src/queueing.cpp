#include "datadam/queueing.hpp"

#include <cmath>
#include <string>

#include "datadam/errors.hpp"

namespace datadam {

Mm1Metrics mm1_metrics(const Mm1Params& params) {
    const double lambda = params.arrival_rate;
    const double mu = params.service_rate;
    if (!std::isfinite(mu) || mu <= 0.0)
        throw InvalidRateError("service rate must be positive, got " + std::to_string(mu));
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw InvalidRateError("arrival rate must be nonnegative, got " + std::to_string(lambda));
    if (lambda >= mu)
        throw InstabilityError("queue diverges: arrival rate " + std::to_string(lambda) +
                               " >= service rate " + std::to_string(mu));

    Mm1Metrics m;
    m.rho = lambda / mu;
    m.w = 1.0 / (mu - lambda);
    m.l = lambda * m.w;  // Little's identity, exact by construction
    m.wq = m.rho / (mu - lambda);
    m.lq = lambda * m.wq;
    return m;
}

Mm1Metrics downstream_report(const RunResult& run, const SystemParams& params) {
    if (run.records.empty())
        throw EmptyRecordError("downstream_report: empty run");

    double outflow_sum = 0.0;
    for (const StepRecord& r : run.records) outflow_sum += r.outflow_actual;
    const double mean_outflow = outflow_sum / static_cast<double>(run.records.size());

    return mm1_metrics({mean_outflow, params.processing});
}

} // namespace datadam
