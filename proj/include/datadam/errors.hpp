#pragma once

#include <stdexcept>
#include <string>

namespace datadam {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Negative inflow or outflow rate passed to an operation.
struct InvalidRateError : Error {
    using Error::Error;
};

/// Reservoir state outside its storage bounds.
struct CorruptStateError : Error {
    using Error::Error;
};

/// Operation requires a nonempty record sequence.
struct EmptyRecordError : Error {
    using Error::Error;
};

/// alpha*dt^2 + beta == 0: the one-step objective has no unique minimizer.
struct DegenerateWeightsError : Error {
    using Error::Error;
};

/// M/M/1 queue with arrival rate >= service rate diverges.
struct InstabilityError : Error {
    using Error::Error;
};

/// A named field violates an invariant.
struct ValidationError : Error {
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// A document contains a field outside the schema.
struct UnknownFieldError : Error {
    explicit UnknownFieldError(const std::string& field)
        : Error("unknown field: " + field) {}
};

/// Malformed structured-text document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace datadam
