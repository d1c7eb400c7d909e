#pragma once

#include <vector>

#include "fkpp/model.hpp"

namespace fkpp::solver {

/// Dirichlet values held at the two boundary nodes. Defaults match the
/// kink's asymptotic states: invaded on the left, empty on the right.
struct DirichletBC {
    double left = 1.0;
    double right = 0.0;
};

/// Initial data for a run. step: 1 for x <= x0 else 0. exp_tail:
/// min(1, exp(-lambda (x - x0))). az: the exact kink evaluated at the
/// dimensionless coordinate. tanh_front: 0.5 (1 - tanh((x - x0)/width)),
/// the smooth steep front used by the epsilon sweeps.
struct InitialCondition {
    enum class Kind { step, exp_tail, az, tanh_front };

    Kind kind = Kind::step;
    double x0 = 0.0;
    double lambda = 1.0; // exp_tail decay rate
    double width = 1.0;  // tanh_front width

    static InitialCondition step(double x0);
    static InitialCondition exp_tail(double x0, double lambda);
    static InitialCondition az(double x0);
    static InitialCondition tanh_front(double x0, double width);
};

struct SolverConfig {
    PhysicalParams params{};
    ScalingParam epsilon{};
    GridPtr grid;
    double t_end = 1.0;
    double dt = 0.0; // 0 = auto: stable_dt snapped so steps land exactly on t_end
    double safety = 0.9;
    DirichletBC bc{};
    double output_every = 0.1;
    bool disable_diffusion = false; // test hook isolating the reaction term

    void validate() const;
};

struct Trajectory {
    std::vector<ScalarField> snapshots; // first at t = 0, strictly increasing
    SolverConfig config;
    double dt_used = 0.0;
    bool front_near_boundary = false; // leading tail reached the right Dirichlet node
};

/// Largest stable explicit step: safety * min(dx^2/(2 eps D), eps/(4U)).
/// The reaction bound drops out at U = 0.
double stable_dt(const SolverConfig& config);

/// Samples the initial condition on the config grid, boundary nodes set to
/// the Dirichlet values.
ScalarField apply_initial_condition(const InitialCondition& ic, const SolverConfig& config);

/// One forward-Euler update of rho_t = eps D rho_xx + (U/eps) rho (1 - rho)
/// with second-order central diffusion; boundary nodes held at the Dirichlet
/// values. Throws instability_error if any updated value is NaN or outside
/// [-0.5, 1.5].
ScalarField step_explicit(const ScalarField& field, const SolverConfig& config, double dt);

/// Time integration with snapshots at the requested cadence (first at t = 0,
/// final within dt of t_end).
Trajectory simulate(const InitialCondition& ic, const SolverConfig& config);

} // namespace fkpp::solver
