#include "fkpp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fkpp/rng.hpp"

namespace fkpp::exact {

namespace {

const double kInvSqrt24 = 1.0 / std::sqrt(24.0);

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw nonpositive_parameter_error(std::string(what) + " must be finite");
    }
}

} // namespace

double az_profile(double z_tilde) {
    require_finite(z_tilde, "z~");
    const double w = 1.0 - std::tanh(z_tilde * kInvSqrt24);
    return 0.25 * w * w;
}

AzDerivs az_profile_derivs(double z_tilde) {
    require_finite(z_tilde, "z~");
    const double s = kInvSqrt24;
    const double T = std::tanh(z_tilde * s);
    const double w = 1.0 - T;
    AzDerivs d;
    d.d1 = -0.5 * s * w * w * (1.0 + T);
    d.d2 = 0.5 * s * s * w * w * (1.0 + T) * (1.0 + 3.0 * T);
    return d;
}

double traveling_ode_residual(double v_tilde, double z_tilde) {
    require_finite(v_tilde, "v~");
    const double rho = az_profile(z_tilde);
    const AzDerivs d = az_profile_derivs(z_tilde);
    return d.d2 + v_tilde * d.d1 + rho * (1.0 - rho);
}

double az_local_decay_rate(double z_tilde) {
    // -rho'/rho simplifies to 2s (1 + tanh(z~ s)); the (1-tanh)^2 factor
    // cancels exactly, so this stays accurate far into the tail.
    require_finite(z_tilde, "z~");
    const double s = kInvSqrt24;
    return 2.0 * s * (1.0 + std::tanh(z_tilde * s));
}

double g1(double x, double t, const PhysicalParams& params) {
    params.validate();
    if (!(t > 0.0)) {
        throw nonpositive_time_error("G1 requires t > 0, got t = " + std::to_string(t));
    }
    return x * x / (4.0 * params.D * t) - params.U * t;
}

namespace {

double g2_slope(double beta, const PhysicalParams& params) {
    params.validate();
    if (!(beta > params.U)) {
        throw invalid_beta_error("G2 requires beta > U (real slope), got beta = " +
                                 std::to_string(beta) + ", U = " + std::to_string(params.U));
    }
    return std::sqrt((beta - params.U) / params.D);
}

double g3_momentum(double v, Branch branch, const PhysicalParams& params) {
    const MomentumRoots roots = momentum_roots(v, params);
    return branch == Branch::plus ? roots.p_plus : roots.p_minus;
}

double gaz_slope(const PhysicalParams& params) {
    params.require_positive_reaction();
    return std::sqrt(2.0 * params.U / (3.0 * params.D));
}

} // namespace

double g2(double x, double t, double beta, const PhysicalParams& params) {
    return g2_slope(beta, params) * x - beta * t;
}

double g3(double x, double t, double v, Branch branch, const PhysicalParams& params) {
    return g3_momentum(v, branch, params) * (x - v * t);
}

double g_az(double x, double t, const PhysicalParams& params) {
    const double a = gaz_slope(params);
    return a * (x - std::sqrt(params.D * params.U) * t);
}

ActionFunctional ActionFunctional::make_g1(const PhysicalParams& params) {
    params.validate();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return ActionFunctional(Kind::g1, params, nan, nan);
}

ActionFunctional ActionFunctional::make_g2(const PhysicalParams& params, double beta) {
    const double slope = g2_slope(beta, params);
    return ActionFunctional(Kind::g2, params, slope, beta);
}

ActionFunctional ActionFunctional::make_g3(const PhysicalParams& params, double v,
                                           Branch branch) {
    const double p = g3_momentum(v, branch, params);
    return ActionFunctional(Kind::g3, params, p, p * v);
}

ActionFunctional ActionFunctional::make_g_az(const PhysicalParams& params) {
    const double a = gaz_slope(params);
    return ActionFunctional(Kind::g_az, params, a, a * std::sqrt(params.D * params.U));
}

double ActionFunctional::value(double x, double t) const {
    if (kind_ == Kind::g1) {
        return g1(x, t, params_);
    }
    return slope_ * x - tcoef_ * t;
}

double ActionFunctional::ddx(double x, double t) const {
    if (kind_ == Kind::g1) {
        if (!(t > 0.0)) {
            throw nonpositive_time_error("G1 partials require t > 0");
        }
        return x / (2.0 * params_.D * t);
    }
    (void)x;
    return slope_;
}

double ActionFunctional::ddt(double x, double t) const {
    if (kind_ == Kind::g1) {
        if (!(t > 0.0)) {
            throw nonpositive_time_error("G1 partials require t > 0");
        }
        return -x * x / (4.0 * params_.D * t * t) - params_.U;
    }
    (void)x;
    return -tcoef_;
}

double ActionFunctional::slope() const {
    if (kind_ == Kind::g1) {
        throw nonpositive_parameter_error("G1 has no constant slope");
    }
    return slope_;
}

double ActionFunctional::time_coefficient() const {
    if (kind_ == Kind::g1) {
        throw nonpositive_parameter_error("G1 has no constant time coefficient");
    }
    return tcoef_;
}

double hj_residual_analytic(const ActionFunctional& g, double x, double t) {
    const long double D = g.params().D;
    const long double U = g.params().U;
    long double gx;
    long double gt;
    if (g.kind() == ActionFunctional::Kind::g1) {
        if (!(t > 0.0)) {
            throw nonpositive_time_error("G1 residual requires t > 0");
        }
        const long double lx = x;
        const long double lt = t;
        gx = lx / (2.0L * D * lt);
        gt = -lx * lx / (4.0L * D * lt * lt) - U;
    } else {
        gx = g.slope();
        gt = -static_cast<long double>(g.time_coefficient());
    }
    return static_cast<double>(gt + D * gx * gx + U);
}

namespace {

long double ansatz_residual(const AnsatzParams& ap, const PhysicalParams& params,
                            double x, double t) {
    const long double c = ap.c;
    const long double a = ap.a;
    const long double b = ap.b;
    const long double alpha = ap.alpha;
    const long double D = params.D;
    const long double U = params.U;
    const long double lx = x;
    const long double lt = t;
    const long double term_t = b * c * std::pow(lx, a) * std::pow(lt, b - 1.0L);
    const long double term_x = D * c * c * a * a * std::pow(lx, 2.0L * (a - 1.0L)) *
                               std::pow(lt, 2.0L * b);
    return term_t - alpha + term_x + U;
}

} // namespace

AnsatzReport verify_ansatz(const AnsatzParams& ap, const PhysicalParams& params,
                           double x_lo, double x_hi, double t_lo, double t_hi,
                           std::uint64_t seed) {
    params.validate();
    if (!(x_hi > x_lo) || !(t_hi > t_lo)) {
        throw invalid_bounds_error("ansatz sample box must be nonempty");
    }
    AnsatzReport report;
    report.seed = seed;
    report.x_lo = x_lo;
    report.x_hi = x_hi;
    report.t_lo = t_lo;
    report.t_hi = t_hi;

    auto consider = [&](double x, double t) {
        const double r = std::fabs(static_cast<double>(ansatz_residual(ap, params, x, t)));
        if (r > report.max_residual) {
            report.max_residual = r;
            report.arg_x = x;
            report.arg_t = t;
        }
        ++report.n_samples;
    };

    constexpr int kLattice = 41;
    for (int i = 0; i < kLattice; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (kLattice - 1.0);
        for (int j = 0; j < kLattice; ++j) {
            const double t = t_lo + (t_hi - t_lo) * j / (kLattice - 1.0);
            consider(x, t);
        }
    }
    Rng rng(seed);
    for (int k = 0; k < 200; ++k) {
        consider(rng.uniform(x_lo, x_hi), rng.uniform(t_lo, t_hi));
    }
    return report;
}

MomentumRoots momentum_roots(double v, const PhysicalParams& params) {
    params.validate();
    require_finite(v, "v");
    const double D = params.D;
    const double U = params.U;
    const double disc_raw = v * v - 4.0 * D * U;
    const double scale = std::max(v * v, std::fabs(4.0 * D * U));
    double disc = disc_raw;
    // Within a few ulps of zero the discriminant is the double root reached
    // through rounding: sqrt would otherwise inflate the noise to ~1e-8.
    if (std::fabs(disc) <= 1e-12 * scale) {
        disc = 0.0;
    } else if (disc < 0.0) {
        throw subcritical_speed_error("v^2 < 4DU: v = " + std::to_string(v) +
                                      ", 4DU = " + std::to_string(4.0 * D * U));
    }
    const double sq = std::sqrt(disc);
    const double q = (v >= 0.0) ? v + sq : v - sq;
    double r1 = q / (2.0 * D);
    double r2 = (q == 0.0) ? 0.0 : 2.0 * U / q;
    MomentumRoots roots;
    roots.p_minus = std::min(r1, r2);
    roots.p_plus = std::max(r1, r2);
    return roots;
}

MinFrontSpeed min_front_speed(const PhysicalParams& params) {
    params.validate();
    if (params.U < 0.0) {
        throw nonpositive_parameter_error("front speed requires U >= 0, got U = " +
                                          std::to_string(params.U));
    }
    if (params.U == 0.0) {
        return {0.0, true};
    }
    return {std::sqrt(4.0 * params.D * params.U), false};
}

LinearAction derive_action_from_asymptotics(double lambda_tilde, double v_tilde,
                                            const PhysicalParams& params, double epsilon) {
    params.require_positive_reaction();
    ScalingParam{epsilon}.validate();
    if (!(lambda_tilde > 0.0) || !std::isfinite(lambda_tilde)) {
        throw nonpositive_parameter_error("decay rate lambda~ must be > 0");
    }
    if (!(v_tilde > 0.0) || !std::isfinite(v_tilde)) {
        throw nonpositive_parameter_error("speed v~ must be > 0");
    }
    // rho ~ exp(-lambda~ (x~ - v~ t~)) with x~ = sqrt(U/D) x / eps, t~ = U t / eps,
    // matched against rho = exp(-G/eps): eps cancels.
    LinearAction act;
    act.A = lambda_tilde * std::sqrt(params.U / params.D);
    act.B = lambda_tilde * v_tilde * params.U;
    return act;
}

GazMatchReport g2_matching_beta(const PhysicalParams& params) {
    params.require_positive_reaction();
    GazMatchReport rep;
    rep.beta_slope = 5.0 * params.U / 3.0;
    rep.paper_beta = std::sqrt(2.0 / 3.0) * params.U;
    rep.beta_minus_U = rep.paper_beta - params.U;
    rep.paper_beta_valid = rep.beta_minus_U > 0.0;
    rep.g2_time_coeff_at_beta_slope = rep.beta_slope;
    rep.derived = derive_action_from_asymptotics(kKinkDecayRate, kKinkSpeed, params, 1.0);
    const double a = std::sqrt(2.0 * params.U / (3.0 * params.D));
    rep.printed = {a, a * std::sqrt(params.D * params.U)};
    const double tol = 1e-12 * params.U;
    rep.time_coeff_matches_derived = std::fabs(rep.beta_slope - rep.derived.B) <= tol;
    rep.time_coeff_matches_printed = std::fabs(rep.beta_slope - rep.printed.B) <= tol;
    return rep;
}

double tail_selected_speed(double lambda, const PhysicalParams& params, double epsilon) {
    params.require_positive_reaction();
    ScalingParam{epsilon}.validate();
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw nonpositive_parameter_error("tail decay rate must be > 0");
    }
    const double lambda_sel = std::sqrt(params.U / params.D) / epsilon;
    if (lambda >= lambda_sel) {
        return std::sqrt(4.0 * params.D * params.U);
    }
    return lambda * epsilon * params.D + params.U / (epsilon * lambda);
}

} // namespace fkpp::exact
