#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "fkpp/errors.hpp"

namespace fkpp {

/// Floor used when taking -eps*log(rho): keeps the action finite without
/// distorting the leading edge, where rho stays >= ~1e-16.
inline constexpr double kRhoFloor = 1e-290;

/// Slack allowed on [0,1] bounds for physically initialized runs.
inline constexpr double kMaxPrincipleTol = 1e-9;

/// Diffusion constant D (length^2/time) and reaction rate U (1/time).
struct PhysicalParams {
    double D = 1.0;
    double U = 1.0;

    /// D > 0, U finite. Negative U is representable (the action audit needs
    /// it) but every front-speed operation rejects it.
    void validate() const;

    /// U > 0 in addition to validate(); required by all front-speed claims.
    void require_positive_reaction() const;
};

/// Scale factor of the hyperbolic space-time rescaling, in (0, 1].
struct ScalingParam {
    double epsilon = 1.0;

    void validate() const;
};

/// Uniform mesh on [x_min, x_max] with n nodes, dx = (x_max - x_min)/(n - 1).
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n = 2;
    double dx = 1.0;
    std::vector<double> x;
};

using GridPtr = std::shared_ptr<const Grid1D>;

Grid1D make_grid(double x_min, double x_max, std::size_t n);
GridPtr make_grid_ptr(double x_min, double x_max, std::size_t n);

/// Scalar field rho sampled on a grid at one instant.
struct ScalarField {
    GridPtr grid;
    std::vector<double> values;
    double time = 0.0;
};

/// Action field G = -eps*log(max(rho, floor)) on a grid, with a per-node
/// mask of where the floor bound.
struct ActionField {
    GridPtr grid;
    std::vector<double> values;
    double epsilon = 1.0;
    double time = 0.0;
    std::vector<std::uint8_t> floor_applied;
};

/// Frame moving at speed v: z = x - v t - origin.
struct TravelingFrame {
    double v = 0.0;
    double origin = 0.0;

    double z(double x, double t) const { return x - v * t - origin; }
};

/// Map to the dimensionless coordinates in which the traveling kink lives:
/// x~ = (1/eps) sqrt(U/D) x,  t~ = (U/eps) t.
class DimensionlessMap {
public:
    DimensionlessMap(ScalingParam epsilon, PhysicalParams params);

    std::pair<double, double> to_dimensionless(double x, double t) const;
    std::pair<double, double> from_dimensionless(double x_tilde, double t_tilde) const;

    /// Spatial stretch factor (1/eps) sqrt(U/D).
    double space_factor() const { return space_factor_; }
    /// Temporal stretch factor U/eps.
    double time_factor() const { return time_factor_; }

    const ScalingParam& epsilon() const { return epsilon_; }
    const PhysicalParams& params() const { return params_; }

private:
    ScalingParam epsilon_;
    PhysicalParams params_;
    double space_factor_;
    double time_factor_;
};

/// Constants of the separable ansatz G(x,t) = c x^a t^b - alpha t.
struct AnsatzParams {
    double c = 0.0;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;

    /// The solved constants (1/(4D), 2, -1, U) that close the ansatz.
    static AnsatzParams solved(const PhysicalParams& params);
};

struct FrontSample {
    double t = 0.0;
    double x = 0.0;
};

/// Time series of level crossings of a propagating front, plus the fitted
/// speed once front_speed() has run.
struct FrontTrace {
    double level = 0.5;
    std::vector<FrontSample> samples;
    double fitted_speed = std::numeric_limits<double>::quiet_NaN();
    double fit_stderr = std::numeric_limits<double>::quiet_NaN();
};

/// Roots of D p^2 - v p + U = 0 (slopes of the traveling linear actions).
/// Vieta: p_minus * p_plus = U/D, p_minus + p_plus = v/D.
struct MomentumRoots {
    double p_minus = 0.0;
    double p_plus = 0.0;
};

} // namespace fkpp
