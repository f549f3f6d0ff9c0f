#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments or definition files (bad indices, bad schema, ...).
struct InputError : Error {
    using Error::Error;
};

// A parameter left the admissible open interval of a measure family,
// or a grid escaped it.
struct DomainError : Error {
    using Error::Error;
};

// An exact-enumeration request exceeds the configured cap.  The message
// always names the module and suggests Monte Carlo mode.
struct CapacityError : Error {
    using Error::Error;
};

// A loaded object violates its own invariants (non-monotone event,
// invalid pmf, decreasing tails, ...).
struct ValidationError : Error {
    using Error::Error;
};

// threshold_window: the probability curve never spans [epsilon, 1-epsilon].
struct NoCrossingError : Error {
    using Error::Error;
};

}  // namespace tlab
