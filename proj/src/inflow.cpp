#include "datadam/inflow.hpp"

#include <cmath>
#include <numbers>

#include "datadam/errors.hpp"

namespace datadam {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// (0, 1); never 0 so it is safe under log().
double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal keyed by (seed, counter); evaluation order is irrelevant.
double counter_gaussian(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t mixed = splitmix64(seed ^ splitmix64(counter));
    const double u1 = to_unit(splitmix64(mixed ^ 0x1234567890abcdefull));
    const double u2 = to_unit(splitmix64(mixed ^ 0xfedcba0987654321ull));
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

void InflowSpec::validate() const {
    if (!std::isfinite(base) || !std::isfinite(amplitude) || amplitude < 0.0 || base < amplitude)
        throw ValidationError("amplitude", "requires base >= amplitude >= 0");
    if (!std::isfinite(period) || period <= 0.0)
        throw ValidationError("period", "must be positive");
    if (!std::isfinite(noise_std) || noise_std < 0.0)
        throw ValidationError("noise_std", "must be nonnegative");
    for (const SpikeWindow& w : spikes) {
        if (!std::isfinite(w.start) || !std::isfinite(w.end) || !(w.start < w.end))
            throw ValidationError("spikes", "window start must be before end");
        if (!std::isfinite(w.boost) || w.boost < 0.0)
            throw ValidationError("spikes", "boost must be nonnegative");
    }
}

double inflow_at(const InflowSpec& spec, double t, std::uint64_t step_index) {
    double value = spec.base +
                   spec.amplitude * std::sin(2.0 * std::numbers::pi * t / spec.period);
    for (const SpikeWindow& w : spec.spikes) {
        if (w.start <= t && t < w.end) value += w.boost;
    }
    if (spec.noise_std > 0.0) {
        value += spec.noise_std * counter_gaussian(spec.seed, step_index);
    }
    return std::max(0.0, value);
}

} // namespace datadam
