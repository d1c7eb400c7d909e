#pragma once

#include <stdexcept>

namespace fkpp {

// Validation failures: the caller handed us arguments that violate a
// documented precondition.
struct invalid_bounds_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct nonpositive_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct nonpositive_time_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// beta <= U makes the G2 slope imaginary.
struct invalid_beta_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// v^2 < 4 D U: the traveling-action discriminant is negative.
struct subcritical_speed_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ordering_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Data-dependent failures detected while running.
struct no_crossing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct insufficient_samples_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct insufficient_snapshots_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct instability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fkpp
