#include "fkpp/model.hpp"

#include <cmath>
#include <string>

namespace fkpp {

void PhysicalParams::validate() const {
    if (!std::isfinite(D) || D <= 0.0) {
        throw nonpositive_parameter_error("diffusion constant D must be finite and > 0, got " +
                                          std::to_string(D));
    }
    if (!std::isfinite(U)) {
        throw nonpositive_parameter_error("reaction rate U must be finite, got " +
                                          std::to_string(U));
    }
}

void PhysicalParams::require_positive_reaction() const {
    validate();
    if (U <= 0.0) {
        throw nonpositive_parameter_error("reaction rate U must be > 0 here, got " +
                                          std::to_string(U));
    }
}

void ScalingParam::validate() const {
    if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon > 1.0) {
        throw nonpositive_parameter_error("epsilon must lie in (0, 1], got " +
                                          std::to_string(epsilon));
    }
}

Grid1D make_grid(double x_min, double x_max, std::size_t n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_max <= x_min) {
        throw invalid_bounds_error("grid bounds require x_max > x_min, got [" +
                                   std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
    }
    if (n < 3) {
        throw invalid_bounds_error("grid needs at least 3 nodes, got " + std::to_string(n));
    }
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n;
    g.dx = (x_max - x_min) / static_cast<double>(n - 1);
    g.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.x[i] = x_min + static_cast<double>(i) * g.dx;
    }
    g.x.back() = x_max;
    return g;
}

GridPtr make_grid_ptr(double x_min, double x_max, std::size_t n) {
    return std::make_shared<const Grid1D>(make_grid(x_min, x_max, n));
}

DimensionlessMap::DimensionlessMap(ScalingParam epsilon, PhysicalParams params)
    : epsilon_(epsilon), params_(params) {
    epsilon_.validate();
    params_.require_positive_reaction();
    space_factor_ = std::sqrt(params_.U / params_.D) / epsilon_.epsilon;
    time_factor_ = params_.U / epsilon_.epsilon;
}

std::pair<double, double> DimensionlessMap::to_dimensionless(double x, double t) const {
    return {space_factor_ * x, time_factor_ * t};
}

std::pair<double, double> DimensionlessMap::from_dimensionless(double x_tilde,
                                                               double t_tilde) const {
    return {x_tilde / space_factor_, t_tilde / time_factor_};
}

AnsatzParams AnsatzParams::solved(const PhysicalParams& params) {
    params.validate();
    return AnsatzParams{1.0 / (4.0 * params.D), 2.0, -1.0, params.U};
}

} // namespace fkpp
