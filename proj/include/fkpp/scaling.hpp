#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fkpp/model.hpp"
#include "fkpp/solver.hpp"

namespace fkpp::scaling {

/// Log transform G = -eps ln(max(rho, rho_floor)), with the floor mask
/// recording where the bound was active.
ActionField action_from_field(const ScalarField& field, double epsilon);

/// Inverse transform rho = exp(-G/eps).
ScalarField field_from_action(const ActionField& action);

/// Pointwise residual of a PDE in the action variable, defined at interior
/// nodes whose finite-difference stencil avoided the log floor.
struct ResidualField {
    GridPtr grid;
    double time = 0.0;
    std::vector<double> values;
    std::vector<std::uint8_t> valid;
};

/// Residual of the transformed equation
///   G_t = eps D G_xx - D G_x^2 - U (1 - e^{-G/eps}),
/// assembled as r = G_t - eps D G_xx + D G_x^2 + U (1 - e^{-G/eps}) at the
/// middle snapshot, central differences in x and t. Needs >= 3 snapshots on
/// one grid with strictly increasing times.
ResidualField g_equation_residual(const std::vector<ActionField>& actions,
                                  const PhysicalParams& params, double epsilon);

/// Residual of the limiting Hamilton-Jacobi equation,
///   r = G_t + D G_x^2 + U,
/// on the same stencil. Expected to vanish only as eps -> 0.
ResidualField hj_limit_residual(const std::vector<ActionField>& actions,
                                const PhysicalParams& params);

/// Rightmost crossing of G = level (either direction), linearly interpolated.
double level_crossing(const ActionField& action, double level);

/// Rightmost zero crossing of the action.
double zero_level(const ActionField& action);

/// Mask of leading-edge nodes: rho in [rho_lo, rho_hi]. The tail this selects
/// is where the limiting equation governs the dynamics.
std::vector<std::uint8_t> leading_edge_mask(const ScalarField& field, double rho_lo = 1e-12,
                                            double rho_hi = 1e-2);

/// Median of |values| over nodes that are valid and (when a mask is given)
/// selected by it.
double median_abs_residual(const ResidualField& residual,
                           const std::vector<std::uint8_t>& mask = {});

struct SweepRow {
    double epsilon = 0.0;
    double front_error = 0.0;
    double hj_residual_median = 0.0;
    double g_eq_residual_median = 0.0;
    bool ok = false;
    std::string error; // populated when ok is false
};

struct SweepConfig {
    std::vector<double> eps_list; // strictly decreasing, all in (0, 1]
    solver::SolverConfig base;    // epsilon is overridden per row
    solver::InitialCondition ic{};
    double t_star = 1.0; // reference time for the front-error column
};

/// For each eps: simulate, transform to the action G, and record the front
/// error |x0 - sqrt(4DU) t| at the snapshot nearest t_star together with the
/// median leading-edge residuals of the limiting equation and the full
/// transformed equation. Rows run independently; a failed row carries its
/// error message instead of aborting the sweep.
std::vector<SweepRow> epsilon_sweep(const SweepConfig& config);

} // namespace fkpp::scaling
