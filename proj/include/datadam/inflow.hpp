#pragma once

#include <cstdint>
#include <vector>

namespace datadam {

/// Uniform inflow boost on [start, end).
struct SpikeWindow {
    double start = 0.0;
    double end = 0.0;
    double boost = 0.0;

    bool operator==(const SpikeWindow&) const = default;
};

/// Parametric inflow signal: sinusoidal base plus spike windows plus optional
/// seeded Gaussian noise. The generated signal is floored at zero.
struct InflowSpec {
    double base = 0.0;              ///< units/time
    double amplitude = 0.0;         ///< units/time, at most base
    double period = 1.0;            ///< time units of the sinusoid
    std::vector<SpikeWindow> spikes;
    double noise_std = 0.0;         ///< 0 disables noise
    std::uint64_t seed = 0;

    /// Throws ValidationError naming the offending field.
    void validate() const;

    bool operator==(const InflowSpec&) const = default;
};

/// Evaluates the inflow rate at time t for the given step index:
/// max(0, base + amplitude*sin(2*pi*t/period) + boosts of windows containing t
/// + noise). Noise is drawn from a counter-based generator keyed by
/// (seed, step_index), so results do not depend on evaluation order.
double inflow_at(const InflowSpec& spec, double t, std::uint64_t step_index);

} // namespace datadam
