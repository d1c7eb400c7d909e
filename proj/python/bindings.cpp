#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fkpp/exact.hpp"
#include "fkpp/front.hpp"
#include "fkpp/model.hpp"
#include "fkpp/report.hpp"
#include "fkpp/scaling.hpp"
#include "fkpp/solver.hpp"

namespace py = pybind11;

namespace {

fkpp::PhysicalParams make_params(double D, double U) {
    fkpp::PhysicalParams params{D, U};
    params.validate();
    return params;
}

fkpp::exact::Branch make_branch(const std::string& name) {
    if (name == "minus") {
        return fkpp::exact::Branch::minus;
    }
    if (name == "plus") {
        return fkpp::exact::Branch::plus;
    }
    throw std::invalid_argument("branch must be 'minus' or 'plus', got '" + name + "'");
}

fkpp::solver::InitialCondition make_ic(const std::string& kind, double x0, double lam,
                                       double width) {
    using IC = fkpp::solver::InitialCondition;
    if (kind == "step") {
        return IC::step(x0);
    }
    if (kind == "exp_tail") {
        return IC::exp_tail(x0, lam);
    }
    if (kind == "az") {
        return IC::az(x0);
    }
    if (kind == "tanh_front") {
        return IC::tanh_front(x0, width);
    }
    throw std::invalid_argument("initial condition must be one of step, exp_tail, az, "
                                "tanh_front; got '" +
                                kind + "'");
}

fkpp::solver::SolverConfig make_config(double D, double U, double eps, double x_min,
                                       double x_max, std::size_t n, double t_end, double dt,
                                       double safety, double output_every, double bc_left,
                                       double bc_right) {
    fkpp::solver::SolverConfig config;
    config.params = {D, U};
    config.epsilon = {eps};
    config.grid = fkpp::make_grid_ptr(x_min, x_max, n);
    config.t_end = t_end;
    config.dt = dt;
    config.safety = safety;
    config.bc = {bc_left, bc_right};
    config.output_every = output_every;
    return config;
}

/// Rebuild snapshot fields from the plain lists a simulate() result carries.
std::vector<fkpp::ScalarField> fields_from_lists(const std::vector<double>& t,
                                                 const std::vector<double>& x,
                                                 const std::vector<std::vector<double>>& rho) {
    if (t.size() != rho.size()) {
        throw std::invalid_argument("need one rho row per time");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("need at least two grid nodes");
    }
    const fkpp::GridPtr grid = fkpp::make_grid_ptr(x.front(), x.back(), x.size());
    std::vector<fkpp::ScalarField> fields;
    fields.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (rho[i].size() != x.size()) {
            throw std::invalid_argument("rho row length does not match the grid");
        }
        fields.push_back({grid, rho[i], t[i]});
    }
    return fields;
}

py::dict trajectory_to_dict(const fkpp::solver::Trajectory& traj) {
    py::list times;
    py::list rho;
    for (const fkpp::ScalarField& s : traj.snapshots) {
        times.append(s.time);
        rho.append(py::cast(s.values));
    }
    py::dict out;
    out["t"] = times;
    out["x"] = py::cast(traj.snapshots.front().grid->x);
    out["rho"] = rho;
    out["dt_used"] = traj.dt_used;
    out["front_near_boundary"] = traj.front_near_boundary;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reaction-diffusion front laboratory: the exact traveling kink, explicit "
              "simulations of the scaled equation, front-speed measurements, and the "
              "closed-form actions of the vanishing-scale limit.";

    m.attr("KINK_SPEED") = fkpp::exact::kKinkSpeed;
    m.attr("KINK_DECAY_RATE") = fkpp::exact::kKinkDecayRate;
    m.attr("RHO_FLOOR") = fkpp::kRhoFloor;

    m.def("az_profile", &fkpp::exact::az_profile, py::arg("z"),
          "The exact traveling kink (1 - tanh(z/sqrt(24)))^2 / 4.");
    m.def(
        "az_profile_derivs",
        [](double z) {
            const fkpp::exact::AzDerivs d = fkpp::exact::az_profile_derivs(z);
            return py::make_tuple(d.d1, d.d2);
        },
        py::arg("z"), "Analytic (first, second) derivatives of az_profile.");
    m.def("traveling_ode_residual", &fkpp::exact::traveling_ode_residual, py::arg("v"),
          py::arg("z"),
          "Residual of rho'' + v rho' + rho(1-rho) on the kink; zero at v = 5/sqrt(6).");
    m.def("az_local_decay_rate", &fkpp::exact::az_local_decay_rate, py::arg("z"),
          "-rho'/rho of the kink; tends to sqrt(2/3) in the leading edge.");

    m.def(
        "g1", [](double x, double t, double D, double U) { return fkpp::exact::g1(x, t, {D, U}); },
        py::arg("x"), py::arg("t"), py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Parabolic action x^2/(4 D t) - U t (t > 0).");
    m.def(
        "g2",
        [](double x, double t, double beta, double D, double U) {
            return fkpp::exact::g2(x, t, beta, {D, U});
        },
        py::arg("x"), py::arg("t"), py::arg("beta"), py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Linear action sqrt((beta-U)/D) x - beta t (beta > U).");
    m.def(
        "g3",
        [](double x, double t, double v, const std::string& branch, double D, double U) {
            return fkpp::exact::g3(x, t, v, make_branch(branch), {D, U});
        },
        py::arg("x"), py::arg("t"), py::arg("v"), py::arg("branch") = "minus",
        py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Traveling action p (x - v t) on the chosen momentum branch (v^2 >= 4DU).");
    m.def(
        "g_az",
        [](double x, double t, double D, double U) { return fkpp::exact::g_az(x, t, {D, U}); },
        py::arg("x"), py::arg("t"), py::arg("D") = 1.0, py::arg("U") = 1.0,
        "The kink's action sqrt(2U/(3D)) (x - sqrt(DU) t) as published.");

    py::class_<fkpp::exact::ActionFunctional>(m, "ActionFunctional",
                                              "A closed-form action with analytic partials.")
        .def_static(
            "g1",
            [](double D, double U) {
                return fkpp::exact::ActionFunctional::make_g1(make_params(D, U));
            },
            py::arg("D") = 1.0, py::arg("U") = 1.0)
        .def_static(
            "g2",
            [](double beta, double D, double U) {
                return fkpp::exact::ActionFunctional::make_g2(make_params(D, U), beta);
            },
            py::arg("beta"), py::arg("D") = 1.0, py::arg("U") = 1.0)
        .def_static(
            "g3",
            [](double v, const std::string& branch, double D, double U) {
                return fkpp::exact::ActionFunctional::make_g3(make_params(D, U), v,
                                                              make_branch(branch));
            },
            py::arg("v"), py::arg("branch") = "minus", py::arg("D") = 1.0, py::arg("U") = 1.0)
        .def_static(
            "g_az",
            [](double D, double U) {
                return fkpp::exact::ActionFunctional::make_g_az(make_params(D, U));
            },
            py::arg("D") = 1.0, py::arg("U") = 1.0)
        .def("value", &fkpp::exact::ActionFunctional::value, py::arg("x"), py::arg("t"))
        .def("ddx", &fkpp::exact::ActionFunctional::ddx, py::arg("x"), py::arg("t"))
        .def("ddt", &fkpp::exact::ActionFunctional::ddt, py::arg("x"), py::arg("t"))
        .def("linear", &fkpp::exact::ActionFunctional::linear)
        .def("slope", &fkpp::exact::ActionFunctional::slope)
        .def("time_coefficient", &fkpp::exact::ActionFunctional::time_coefficient);

    m.def("hj_residual", &fkpp::exact::hj_residual_analytic, py::arg("g"), py::arg("x"),
          py::arg("t"),
          "Residual dG/dt + D (dG/dx)^2 + U of the limiting equation, from analytic partials.");

    m.def(
        "momentum_roots",
        [](double v, double D, double U) {
            const fkpp::MomentumRoots r = fkpp::exact::momentum_roots(v, {D, U});
            return py::make_tuple(r.p_minus, r.p_plus);
        },
        py::arg("v"), py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Roots (p_minus, p_plus) of D p^2 - v p + U = 0.");
    m.def(
        "min_front_speed",
        [](double D, double U) { return fkpp::exact::min_front_speed({D, U}).v; },
        py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Selected front speed sqrt(4 D U) for steep initial data (0 when U = 0).");
    m.def(
        "tail_selected_speed",
        [](double lam, double D, double U, double eps) {
            return fkpp::exact::tail_selected_speed(lam, {D, U}, eps);
        },
        py::arg("lam"), py::arg("D") = 1.0, py::arg("U") = 1.0, py::arg("eps") = 1.0,
        "Front speed selected by an exponential tail of rate lam.");

    m.def(
        "ansatz_solved",
        [](double D, double U) {
            const fkpp::AnsatzParams ap = fkpp::AnsatzParams::solved(make_params(D, U));
            return py::make_tuple(ap.c, ap.a, ap.b, ap.alpha);
        },
        py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Constants (c, a, b, alpha) closing the ansatz G = c x^a t^b - alpha t.");
    m.def(
        "verify_ansatz",
        [](double c, double a, double b, double alpha, double D, double U, std::uint64_t seed) {
            const fkpp::AnsatzParams ap{c, a, b, alpha};
            const fkpp::exact::AnsatzReport rep =
                fkpp::exact::verify_ansatz(ap, make_params(D, U), 0.1, 10.0, 0.1, 10.0, seed);
            py::dict out;
            out["max_residual"] = rep.max_residual;
            out["arg_x"] = rep.arg_x;
            out["arg_t"] = rep.arg_t;
            out["n_samples"] = rep.n_samples;
            out["seed"] = rep.seed;
            return out;
        },
        py::arg("c"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("D") = 1.0,
        py::arg("U") = 1.0, py::arg("seed") = 20240817,
        "Largest |residual| of G = c x^a t^b - alpha t in the limiting equation over a "
        "sampled box.");

    m.def(
        "derive_action_from_asymptotics",
        [](double lambda_tilde, double v_tilde, double D, double U, double eps) {
            const fkpp::exact::LinearAction la = fkpp::exact::derive_action_from_asymptotics(
                lambda_tilde, v_tilde, make_params(D, U), eps);
            return py::make_tuple(la.A, la.B);
        },
        py::arg("lambda_tilde"), py::arg("v_tilde"), py::arg("D") = 1.0, py::arg("U") = 1.0,
        py::arg("eps") = 1.0,
        "Coefficients (A, B) of G = A x - B t implied by a tail exp(-lambda_tilde z) moving "
        "at v_tilde in kink variables; eps cancels.");
    m.def(
        "compare_gaz",
        [](double D, double U) {
            const fkpp::exact::GazMatchReport rep = fkpp::exact::g2_matching_beta({D, U});
            py::dict out;
            out["paper_beta"] = rep.paper_beta;
            out["beta_minus_U"] = rep.beta_minus_U;
            out["paper_beta_valid"] = rep.paper_beta_valid;
            out["slope_matching_beta"] = rep.beta_slope;
            out["g2_time_coeff_at_beta_slope"] = rep.g2_time_coeff_at_beta_slope;
            out["derived_A"] = rep.derived.A;
            out["derived_B"] = rep.derived.B;
            out["printed_A"] = rep.printed.A;
            out["printed_B"] = rep.printed.B;
            out["time_coeff_matches_derived"] = rep.time_coeff_matches_derived;
            out["time_coeff_matches_printed"] = rep.time_coeff_matches_printed;
            return out;
        },
        py::arg("D") = 1.0, py::arg("U") = 1.0,
        "Audit of the published kink action against the linear family it is claimed to "
        "match.");

    m.def(
        "simulate",
        [](double D, double U, double eps, double x_min, double x_max, std::size_t n,
           double t_end, const std::string& ic, double x0, double lam, double width, double dt,
           double safety, double output_every, double bc_left, double bc_right) {
            const fkpp::solver::SolverConfig config =
                make_config(D, U, eps, x_min, x_max, n, t_end, dt, safety, output_every,
                            bc_left, bc_right);
            const fkpp::solver::InitialCondition init = make_ic(ic, x0, lam, width);
            const fkpp::solver::Trajectory traj = [&] {
                py::gil_scoped_release release;
                return fkpp::solver::simulate(init, config);
            }();
            return trajectory_to_dict(traj);
        },
        py::arg("D") = 1.0, py::arg("U") = 1.0, py::arg("eps") = 1.0, py::arg("x_min") = 0.0,
        py::arg("x_max") = 100.0, py::arg("n") = 2001, py::arg("t_end") = 10.0,
        py::arg("ic") = "step", py::arg("x0") = 0.0, py::arg("lam") = 1.0,
        py::arg("width") = 1.0, py::arg("dt") = 0.0, py::arg("safety") = 0.9,
        py::arg("output_every") = 0.1, py::arg("bc_left") = 1.0, py::arg("bc_right") = 0.0,
        "Integrate the scaled equation; returns {'t', 'x', 'rho', 'dt_used', "
        "'front_near_boundary'}.");

    m.def(
        "front_position",
        [](const std::vector<double>& x, const std::vector<double>& values, double level) {
            const std::vector<fkpp::ScalarField> fields = fields_from_lists({0.0}, x, {values});
            return fkpp::front::front_position(fields.front(), level);
        },
        py::arg("x"), py::arg("values"), py::arg("level") = 0.5,
        "Rightmost downward crossing of the level, linearly interpolated.");
    m.def(
        "measure_front_speed",
        [](const std::vector<double>& t, const std::vector<double>& x,
           const std::vector<std::vector<double>>& rho, double level, double fit_window) {
            const std::vector<fkpp::ScalarField> fields = fields_from_lists(t, x, rho);
            const fkpp::FrontTrace trace = fkpp::front::trace_front(fields, level);
            const fkpp::front::SpeedFit fit = fkpp::front::front_speed(trace, fit_window);
            py::list ts;
            py::list xs;
            for (const fkpp::FrontSample& s : trace.samples) {
                ts.append(s.t);
                xs.append(s.x);
            }
            py::dict out;
            out["speed"] = fit.speed;
            out["stderr"] = fit.stderr_;
            out["n_used"] = fit.n_used;
            out["t"] = ts;
            out["x_front"] = xs;
            return out;
        },
        py::arg("t"), py::arg("x"), py::arg("rho"), py::arg("level") = 0.5,
        py::arg("fit_window") = 0.5,
        "Track the level crossing over snapshots and fit its speed over the trailing "
        "window.");
    m.def(
        "decay_rate",
        [](const std::vector<double>& x, const std::vector<double>& values, double rho_lo,
           double rho_hi) {
            const std::vector<fkpp::ScalarField> fields = fields_from_lists({0.0}, x, {values});
            return fkpp::front::decay_rate(fields.front(), rho_lo, rho_hi);
        },
        py::arg("x"), py::arg("values"), py::arg("rho_lo") = 1e-8, py::arg("rho_hi") = 1e-3,
        "Spatial decay rate of the leading edge from a log-linear fit.");

    m.def(
        "action_from_field",
        [](const std::vector<double>& x, const std::vector<double>& values, double eps) {
            const std::vector<fkpp::ScalarField> fields = fields_from_lists({0.0}, x, {values});
            const fkpp::ActionField action = fkpp::scaling::action_from_field(fields.front(), eps);
            py::dict out;
            out["G"] = py::cast(action.values);
            out["floor_applied"] = py::cast(action.floor_applied);
            return out;
        },
        py::arg("x"), py::arg("values"), py::arg("eps"),
        "Log transform G = -eps ln(max(rho, floor)) with the floor mask.");

    m.def(
        "epsilon_sweep",
        [](const std::vector<double>& eps_list, double D, double U, double x_min, double x_max,
           std::size_t n, double t_end, const std::string& ic, double x0, double lam,
           double width, double safety, double output_every, double t_star) {
            fkpp::scaling::SweepConfig sweep;
            sweep.eps_list = eps_list;
            sweep.base = make_config(D, U, eps_list.empty() ? 1.0 : eps_list.front(), x_min,
                                     x_max, n, t_end, 0.0, safety, output_every, 1.0, 0.0);
            sweep.ic = make_ic(ic, x0, lam, width);
            sweep.t_star = t_star;
            const std::vector<fkpp::scaling::SweepRow> rows = [&] {
                py::gil_scoped_release release;
                return fkpp::scaling::epsilon_sweep(sweep);
            }();
            py::list out;
            for (const fkpp::scaling::SweepRow& row : rows) {
                py::dict r;
                r["epsilon"] = row.epsilon;
                r["ok"] = row.ok;
                if (row.ok) {
                    r["front_error"] = row.front_error;
                    r["hj_residual_median"] = row.hj_residual_median;
                    r["g_eq_residual_median"] = row.g_eq_residual_median;
                } else {
                    r["error"] = row.error;
                }
                out.append(r);
            }
            return out;
        },
        py::arg("eps_list"), py::arg("D") = 1.0, py::arg("U") = 1.0, py::arg("x_min") = -4.0,
        py::arg("x_max") = 20.0, py::arg("n") = 1921, py::arg("t_end") = 1.02,
        py::arg("ic") = "tanh_front", py::arg("x0") = 0.0, py::arg("lam") = 1.0,
        py::arg("width") = 0.0625, py::arg("safety") = 0.2, py::arg("output_every") = 0.01,
        py::arg("t_star") = 1.0,
        "One row per epsilon: front error at t_star and median leading-edge residuals of "
        "the limiting and transformed equations.");

    m.def(
        "run_verification",
        [](std::uint64_t seed) {
            const std::vector<fkpp::report::CheckResult> results = [&] {
                py::gil_scoped_release release;
                return fkpp::report::run_verification(seed);
            }();
            py::list out;
            for (const fkpp::report::CheckResult& r : results) {
                py::dict d;
                d["name"] = r.name;
                d["statistic"] = r.statistic;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                d["informational"] = r.informational;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 20240817,
        "Run the analytic verification suite; one dict per check, in a fixed order.");
}
