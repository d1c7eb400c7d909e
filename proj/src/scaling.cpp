#include "fkpp/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fkpp/errors.hpp"
#include "fkpp/parallel.hpp"

namespace fkpp::scaling {

ActionField action_from_field(const ScalarField& field, double epsilon) {
    ScalingParam{epsilon}.validate();
    ActionField action;
    action.grid = field.grid;
    action.epsilon = epsilon;
    action.time = field.time;
    action.values.resize(field.values.size());
    action.floor_applied.assign(field.values.size(), 0);
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        const double rho = field.values[i];
        if (!(rho >= 0.0)) {
            throw invalid_bounds_error("log transform needs a nonnegative field, got " +
                                       std::to_string(rho) + " at node " + std::to_string(i));
        }
        if (rho < kRhoFloor) {
            action.floor_applied[i] = 1;
            action.values[i] = -epsilon * std::log(kRhoFloor);
        } else {
            action.values[i] = -epsilon * std::log(rho);
        }
    }
    return action;
}

ScalarField field_from_action(const ActionField& action) {
    ScalarField field{action.grid, std::vector<double>(action.values.size()), action.time};
    for (std::size_t i = 0; i < action.values.size(); ++i) {
        field.values[i] = std::exp(-action.values[i] / action.epsilon);
    }
    return field;
}

namespace {

struct Window {
    const ActionField* prev;
    const ActionField* mid;
    const ActionField* next;
};

bool same_grid(const Grid1D& a, const Grid1D& b) {
    return a.n == b.n && a.x_min == b.x_min && a.x_max == b.x_max;
}

Window select_window(const std::vector<ActionField>& actions) {
    if (actions.size() < 3) {
        throw insufficient_snapshots_error("time-centered residuals need at least 3 snapshots, got " +
                                           std::to_string(actions.size()));
    }
    const std::size_t c = actions.size() / 2;
    Window w{&actions[c - 1], &actions[c], &actions[c + 1]};
    if (!w.prev->grid || !w.mid->grid || !w.next->grid ||
        !same_grid(*w.prev->grid, *w.mid->grid) || !same_grid(*w.next->grid, *w.mid->grid)) {
        throw invalid_bounds_error("residual snapshots must share one grid");
    }
    if (!(w.prev->time < w.mid->time) || !(w.mid->time < w.next->time)) {
        throw ordering_error("residual snapshots must have strictly increasing times");
    }
    const double eps = w.mid->epsilon;
    if (std::abs(w.prev->epsilon - eps) > 1e-12 * eps ||
        std::abs(w.next->epsilon - eps) > 1e-12 * eps) {
        throw invalid_bounds_error("residual snapshots must share one epsilon");
    }
    return w;
}

/// Assembles r_i = G_t + D G_x^2 + U + extra(i) at interior nodes, where the
/// time derivative is the second-order three-point formula (valid for the
/// possibly unequal spacing of the final forced snapshot).
template <typename Extra>
ResidualField assemble_residual(const Window& w, const PhysicalParams& params, Extra extra) {
    const Grid1D& grid = *w.mid->grid;
    const std::size_t n = grid.n;
    ResidualField residual;
    residual.grid = w.mid->grid;
    residual.time = w.mid->time;
    residual.values.assign(n, 0.0);
    residual.valid.assign(n, 0);

    const double dt1 = w.mid->time - w.prev->time;
    const double dt2 = w.next->time - w.mid->time;
    const double denom = dt1 * dt2 * (dt1 + dt2);
    const double dx = grid.dx;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (w.mid->floor_applied[i] || w.mid->floor_applied[i - 1] ||
            w.mid->floor_applied[i + 1] || w.prev->floor_applied[i] ||
            w.next->floor_applied[i]) {
            continue;
        }
        const double g = w.mid->values[i];
        const double g_t = (dt1 * dt1 * w.next->values[i] + (dt2 * dt2 - dt1 * dt1) * g -
                            dt2 * dt2 * w.prev->values[i]) /
                           denom;
        const double g_x = (w.mid->values[i + 1] - w.mid->values[i - 1]) / (2.0 * dx);
        const double g_xx =
            (w.mid->values[i + 1] - 2.0 * g + w.mid->values[i - 1]) / (dx * dx);
        residual.values[i] = g_t + params.D * g_x * g_x + params.U + extra(g, g_xx);
        residual.valid[i] = 1;
    }
    return residual;
}

} // namespace

ResidualField g_equation_residual(const std::vector<ActionField>& actions,
                                  const PhysicalParams& params, double epsilon) {
    params.validate();
    ScalingParam{epsilon}.validate();
    const Window w = select_window(actions);
    if (std::abs(w.mid->epsilon - epsilon) > 1e-12 * epsilon) {
        throw invalid_bounds_error("snapshots were transformed with epsilon = " +
                                   std::to_string(w.mid->epsilon) + ", residual requested at " +
                                   std::to_string(epsilon));
    }
    const double eps_d = epsilon * params.D;
    const double u = params.U;
    // Relative to the limiting equation, the full transformed equation keeps
    // the eps D G_xx viscosity and replaces U by U(1 - e^{-G/eps}).
    return assemble_residual(w, params, [eps_d, u, epsilon](double g, double g_xx) {
        return -eps_d * g_xx - u * std::exp(-g / epsilon);
    });
}

ResidualField hj_limit_residual(const std::vector<ActionField>& actions,
                                const PhysicalParams& params) {
    params.validate();
    const Window w = select_window(actions);
    return assemble_residual(w, params, [](double, double) { return 0.0; });
}

double level_crossing(const ActionField& action, double level) {
    const std::vector<double>& v = action.values;
    const std::vector<double>& x = action.grid->x;
    const std::size_t n = v.size();
    if (v[n - 1] == level) {
        return x[n - 1];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        const double a = v[i] - level;
        const double b = v[i + 1] - level;
        if (a == 0.0) {
            return x[i];
        }
        if ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0)) {
            return x[i] + (x[i + 1] - x[i]) * (a / (a - b));
        }
    }
    throw no_crossing_error("action never crosses level " + std::to_string(level));
}

double zero_level(const ActionField& action) {
    return level_crossing(action, 0.0);
}

std::vector<std::uint8_t> leading_edge_mask(const ScalarField& field, double rho_lo,
                                            double rho_hi) {
    if (!(rho_lo > 0.0) || !(rho_lo < rho_hi)) {
        throw invalid_bounds_error("need 0 < rho_lo < rho_hi, got [" + std::to_string(rho_lo) +
                                   ", " + std::to_string(rho_hi) + "]");
    }
    std::vector<std::uint8_t> mask(field.values.size(), 0);
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        const double r = field.values[i];
        mask[i] = (r >= rho_lo && r <= rho_hi) ? 1 : 0;
    }
    return mask;
}

double median_abs_residual(const ResidualField& residual,
                           const std::vector<std::uint8_t>& mask) {
    if (!mask.empty() && mask.size() != residual.values.size()) {
        throw invalid_bounds_error("mask size " + std::to_string(mask.size()) +
                                   " does not match residual size " +
                                   std::to_string(residual.values.size()));
    }
    std::vector<double> magnitudes;
    for (std::size_t i = 0; i < residual.values.size(); ++i) {
        if (residual.valid[i] && (mask.empty() || mask[i])) {
            magnitudes.push_back(std::abs(residual.values[i]));
        }
    }
    if (magnitudes.empty()) {
        throw insufficient_samples_error("no valid nodes selected for the median residual");
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    const std::size_t m = magnitudes.size();
    return m % 2 == 1 ? magnitudes[m / 2]
                      : 0.5 * (magnitudes[m / 2 - 1] + magnitudes[m / 2]);
}

namespace {

SweepRow run_sweep_row(double eps, const SweepConfig& sweep) {
    SweepRow row;
    row.epsilon = eps;
    try {
        solver::SolverConfig config = sweep.base;
        config.epsilon.epsilon = eps;
        const solver::Trajectory trajectory = solver::simulate(sweep.ic, config);
        const std::vector<ScalarField>& snaps = trajectory.snapshots;
        if (snaps.size() < 3) {
            throw insufficient_snapshots_error(
                "sweep needs at least 3 snapshots around the reference time; lower output_every");
        }
        // Center the residual window on the snapshot nearest the reference time.
        std::size_t c = 1;
        for (std::size_t i = 1; i + 1 < snaps.size(); ++i) {
            if (std::abs(snaps[i].time - sweep.t_star) < std::abs(snaps[c].time - sweep.t_star)) {
                c = i;
            }
        }
        const std::vector<ActionField> window = {action_from_field(snaps[c - 1], eps),
                                                 action_from_field(snaps[c], eps),
                                                 action_from_field(snaps[c + 1], eps)};
        // The front condition G = 0 is degenerate at finite eps (G > 0 strictly
        // wherever rho < 1), so the front is read at G = eps ln 2 -- exactly the
        // rho = 1/2 level set, collapsing onto the zero level as eps -> 0.
        const double x0 = level_crossing(window[1], eps * std::log(2.0));
        const double v_limit = std::sqrt(4.0 * config.params.D * config.params.U);
        row.front_error = std::abs(x0 - v_limit * window[1].time);

        const std::vector<std::uint8_t> mask = leading_edge_mask(snaps[c]);
        row.hj_residual_median =
            median_abs_residual(hj_limit_residual(window, config.params), mask);
        row.g_eq_residual_median =
            median_abs_residual(g_equation_residual(window, config.params, eps), mask);
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> epsilon_sweep(const SweepConfig& config) {
    if (config.eps_list.empty()) {
        throw invalid_bounds_error("epsilon sweep needs at least one epsilon");
    }
    for (std::size_t i = 0; i < config.eps_list.size(); ++i) {
        ScalingParam{config.eps_list[i]}.validate();
        if (i > 0 && !(config.eps_list[i] < config.eps_list[i - 1])) {
            throw ordering_error("epsilon list must be strictly decreasing, got " +
                                 std::to_string(config.eps_list[i - 1]) + " then " +
                                 std::to_string(config.eps_list[i]));
        }
    }
    if (!(config.t_star > 0.0)) {
        throw nonpositive_time_error("reference time must be positive, got " +
                                     std::to_string(config.t_star));
    }
    std::vector<SweepRow> rows(config.eps_list.size());
    parallel_for_index(config.eps_list.size(), [&](std::size_t i) {
        rows[i] = run_sweep_row(config.eps_list[i], config);
    });
    return rows;
}

} // namespace fkpp::scaling
