#pragma once

#include <vector>

#include "fkpp/model.hpp"

namespace fkpp::front {

/// Rightmost downward crossing of `level`, located by linear interpolation
/// between the bracketing nodes. Ties break toward larger x so small
/// oscillations behind the front are ignored.
double front_position(const ScalarField& field, double level);

/// Front positions over a sequence of snapshots; snapshots that never cross
/// the level are skipped.
FrontTrace trace_front(const std::vector<ScalarField>& snapshots, double level);

struct SpeedFit {
    double speed = 0.0;
    double stderr_ = 0.0; // standard error of the fitted slope
    std::size_t n_used = 0;
};

/// Least-squares slope of x*(t) over the trailing `fit_window` fraction of
/// the samples (e.g. 0.5 = last half, discarding front formation).
SpeedFit front_speed(const FrontTrace& trace, double fit_window = 0.5);

/// Spatial decay rate of the leading edge: minus the least-squares slope of
/// ln(rho) against x over the nodes with rho in [rho_lo, rho_hi].
double decay_rate(const ScalarField& field, double rho_lo = 1e-8, double rho_hi = 1e-3);

} // namespace fkpp::front
