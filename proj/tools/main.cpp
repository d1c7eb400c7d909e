#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fkpp/errors.hpp"
#include "fkpp/exact.hpp"
#include "fkpp/front.hpp"
#include "fkpp/io.hpp"
#include "fkpp/model.hpp"
#include "fkpp/report.hpp"
#include "fkpp/scaling.hpp"
#include "fkpp/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;  // bad flags or violated preconditions
constexpr int kExitNumerical = 2;   // runtime failure (instability, no crossing, I/O)
constexpr int kExitCheckFailure = 3; // a verification check did not pass

/// Flags shared by every command that runs the solver.
struct SimFlags {
    double D = 1.0;
    double U = 1.0;
    double eps = 1.0;
    double x_min = 0.0;
    double x_max = 100.0;
    double dx = 0.05;
    std::size_t n = 0; // 0: derive from dx
    double t_end = 10.0;
    double dt = 0.0; // 0: automatic stable step
    double safety = 0.9;
    double output_every = 0.1;
    std::string ic = "step";
    double x0 = 0.0;
    double lambda = 1.0;
    double width = 1.0;
    double bc_left = 1.0;
    double bc_right = 0.0;
    bool dimensionless = false;
};

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
    auto* d = cmd->add_option("--D", f.D, "Diffusion coefficient")->capture_default_str();
    auto* u = cmd->add_option("--U", f.U, "Reaction rate")->capture_default_str();
    auto* e = cmd->add_option("--eps", f.eps, "Scaling parameter in (0, 1]")->capture_default_str();
    cmd->add_option("--x-min", f.x_min, "Left edge of the domain")->capture_default_str();
    cmd->add_option("--x-max", f.x_max, "Right edge of the domain")->capture_default_str();
    cmd->add_option("--dx", f.dx, "Grid spacing (used when --n is absent)")->capture_default_str();
    cmd->add_option("--n", f.n, "Number of grid nodes (overrides --dx)");
    cmd->add_option("--t-end", f.t_end, "Final time")->capture_default_str();
    cmd->add_option("--dt", f.dt, "Time step; 0 picks the stable step automatically")
        ->capture_default_str();
    cmd->add_option("--safety", f.safety, "Stability safety factor in (0, 1]")
        ->capture_default_str();
    cmd->add_option("--output-every", f.output_every, "Snapshot cadence in time units")
        ->capture_default_str();
    cmd->add_option("--ic", f.ic, "Initial condition: step | exp_tail | az | tanh_front")
        ->check(CLI::IsMember({"step", "exp_tail", "az", "tanh_front"}))
        ->capture_default_str();
    cmd->add_option("--x0", f.x0, "Initial front location")->capture_default_str();
    cmd->add_option("--lambda", f.lambda, "Tail decay rate (exp_tail)")->capture_default_str();
    cmd->add_option("--width", f.width, "Front width (tanh_front)")->capture_default_str();
    cmd->add_option("--bc-left", f.bc_left, "Left Dirichlet value")->capture_default_str();
    cmd->add_option("--bc-right", f.bc_right, "Right Dirichlet value")->capture_default_str();
    auto* dimless = cmd->add_flag("--dimensionless", f.dimensionless,
                                  "Work in kink variables: forces D = U = eps = 1");
    dimless->excludes(d)->excludes(u)->excludes(e);
}

fkpp::solver::SolverConfig build_config(const SimFlags& flags) {
    SimFlags f = flags;
    if (f.dimensionless) {
        f.D = f.U = f.eps = 1.0;
    }
    fkpp::solver::SolverConfig config;
    config.params = {f.D, f.U};
    config.epsilon = {f.eps};
    std::size_t n = f.n;
    if (n == 0) {
        if (!(f.dx > 0.0)) {
            throw fkpp::invalid_bounds_error("dx must be positive, got " + std::to_string(f.dx));
        }
        n = static_cast<std::size_t>(std::llround((f.x_max - f.x_min) / f.dx)) + 1;
    }
    config.grid = fkpp::make_grid_ptr(f.x_min, f.x_max, n);
    config.t_end = f.t_end;
    config.dt = f.dt;
    config.safety = f.safety;
    config.bc = {f.bc_left, f.bc_right};
    config.output_every = f.output_every;
    return config;
}

fkpp::solver::InitialCondition build_ic(const SimFlags& f) {
    using IC = fkpp::solver::InitialCondition;
    if (f.ic == "step") {
        return IC::step(f.x0);
    }
    if (f.ic == "exp_tail") {
        return IC::exp_tail(f.x0, f.lambda);
    }
    if (f.ic == "az") {
        return IC::az(f.x0);
    }
    return IC::tanh_front(f.x0, f.width);
}

/// Speed each initial condition is expected to select.
double theory_speed(const SimFlags& f, const fkpp::solver::SolverConfig& config) {
    const fkpp::PhysicalParams& p = config.params;
    const double eps = config.epsilon.epsilon;
    if (f.ic == "az") {
        return fkpp::exact::kKinkSpeed * std::sqrt(p.D * p.U);
    }
    if (f.ic == "exp_tail") {
        return fkpp::exact::tail_selected_speed(f.lambda, p, eps);
    }
    if (f.ic == "tanh_front") {
        // The tanh shoulder decays at rate 2/width.
        return fkpp::exact::tail_selected_speed(2.0 / f.width, p, eps);
    }
    return fkpp::exact::min_front_speed(p).v;
}

json config_to_json(const SimFlags& f, const fkpp::solver::SolverConfig& config,
                    std::uint64_t seed) {
    return json{
        {"seed", seed},
        {"dimensionless", f.dimensionless},
        {"params", {{"D", config.params.D}, {"U", config.params.U}}},
        {"epsilon", config.epsilon.epsilon},
        {"grid",
         {{"x_min", config.grid->x_min},
          {"x_max", config.grid->x_max},
          {"n", config.grid->n},
          {"dx", config.grid->dx}}},
        {"time",
         {{"t_end", config.t_end},
          {"dt_requested", config.dt},
          {"safety", config.safety},
          {"output_every", config.output_every},
          {"stable_dt", fkpp::solver::stable_dt(config)}}},
        {"ic",
         {{"kind", f.ic}, {"x0", f.x0}, {"lambda", f.lambda}, {"width", f.width}}},
        {"bc", {{"left", config.bc.left}, {"right", config.bc.right}}},
    };
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw fkpp::file_error("cannot open '" + path + "' for writing");
    }
    out << j.dump(2) << '\n';
    if (!out.flush()) {
        throw fkpp::file_error("write to '" + path + "' failed");
    }
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

double wall_seconds(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double>(elapsed).count();
}

int cmd_verify(std::uint64_t seed, const std::string& out_dir) {
    const std::vector<fkpp::report::CheckResult> results = fkpp::report::run_verification(seed);
    json checks = json::array();
    for (const fkpp::report::CheckResult& r : results) {
        checks.push_back({{"name", r.name},
                          {"statistic", r.statistic},
                          {"tolerance", std::isnan(r.tolerance) ? json() : json(r.tolerance)},
                          {"pass", r.pass},
                          {"informational", r.informational},
                          {"detail", r.detail}});
    }
    const bool ok = fkpp::report::all_pass(results);
    const json out{{"command", "verify"}, {"seed", seed}, {"checks", checks}, {"all_pass", ok}};
    write_json_file(join_path(out_dir, "verify.json"), out);
    std::cout << out.dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailure;
}

int cmd_simulate(const SimFlags& flags, std::uint64_t seed, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    const fkpp::solver::SolverConfig config = build_config(flags);
    const fkpp::solver::Trajectory trajectory = fkpp::solver::simulate(build_ic(flags), config);

    const std::string csv_path = join_path(out_dir, "simulate.csv");
    fkpp::io::write_trajectory_csv(csv_path, trajectory.snapshots);

    json meta = config_to_json(flags, config, seed);
    meta["command"] = "simulate";
    meta["time"]["dt_used"] = trajectory.dt_used;
    meta["n_snapshots"] = trajectory.snapshots.size();
    meta["front_near_boundary"] = trajectory.front_near_boundary;
    meta["outputs"] = {{"trajectory_csv", csv_path}};
    meta["wall_time_s"] = wall_seconds(start);
    const std::string meta_path = join_path(out_dir, "simulate.meta.json");
    write_json_file(meta_path, meta);
    std::cout << meta.dump(2) << '\n';
    return kExitOk;
}

int cmd_front_speed(const SimFlags& flags, std::uint64_t seed, const std::string& out_dir,
                    const std::string& trajectory_path, double level, double fit_window) {
    const auto start = std::chrono::steady_clock::now();
    const fkpp::solver::SolverConfig config = build_config(flags);

    std::vector<fkpp::ScalarField> snapshots;
    bool near_boundary = false;
    double dt_used = 0.0;
    if (!trajectory_path.empty()) {
        snapshots = fkpp::io::read_trajectory_csv(trajectory_path);
    } else {
        fkpp::solver::Trajectory trajectory =
            fkpp::solver::simulate(build_ic(flags), config);
        near_boundary = trajectory.front_near_boundary;
        dt_used = trajectory.dt_used;
        snapshots = std::move(trajectory.snapshots);
    }

    fkpp::FrontTrace trace = fkpp::front::trace_front(snapshots, level);
    const fkpp::front::SpeedFit fit = fkpp::front::front_speed(trace, fit_window);
    trace.fitted_speed = fit.speed;
    trace.fit_stderr = fit.stderr_;

    const double v_theory = theory_speed(flags, config);
    const double rel_error = std::abs(fit.speed - v_theory) / std::abs(v_theory);

    const std::string trace_path = join_path(out_dir, "front_trace.csv");
    fkpp::io::write_front_trace_csv(trace_path, trace);

    json out = config_to_json(flags, config, seed);
    out["command"] = "front-speed";
    out["v_hat"] = fit.speed;
    out["stderr"] = fit.stderr_;
    out["v_theory"] = v_theory;
    out["rel_error"] = rel_error;
    out["level"] = level;
    out["fit_window"] = fit_window;
    out["n_samples_fit"] = fit.n_used;
    out["n_samples_total"] = trace.samples.size();
    out["front_near_boundary"] = near_boundary;
    if (!trajectory_path.empty()) {
        out["trajectory_csv_in"] = trajectory_path;
    } else {
        out["time"]["dt_used"] = dt_used;
    }
    out["outputs"] = {{"front_trace_csv", trace_path}};
    out["wall_time_s"] = wall_seconds(start);
    write_json_file(join_path(out_dir, "front_speed.json"), out);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_sweep_epsilon(const SimFlags& flags, const std::vector<double>& eps_list, double t_star,
                      std::uint64_t seed, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    fkpp::scaling::SweepConfig sweep;
    sweep.eps_list = eps_list;
    sweep.base = build_config(flags);
    sweep.ic = build_ic(flags);
    sweep.t_star = t_star;
    const std::vector<fkpp::scaling::SweepRow> rows = fkpp::scaling::epsilon_sweep(sweep);

    const std::string csv_path = join_path(out_dir, "sweep.csv");
    fkpp::io::write_sweep_csv(csv_path, rows);

    bool any_failed = false;
    json rows_json = json::array();
    for (const fkpp::scaling::SweepRow& row : rows) {
        json r{{"epsilon", row.epsilon}, {"ok", row.ok}};
        if (row.ok) {
            r["front_error"] = row.front_error;
            r["hj_residual_median"] = row.hj_residual_median;
            r["g_eq_residual_median"] = row.g_eq_residual_median;
        } else {
            r["error"] = row.error;
            any_failed = true;
        }
        rows_json.push_back(r);
    }

    json verdict;
    json front_mono, hj_mono, g_eq_mono;
    if (rows.size() < 2) {
        verdict = "n/a";
    } else if (any_failed) {
        verdict = false;
    } else {
        bool fm = true, hm = true, gm = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            fm = fm && rows[i].front_error < rows[i - 1].front_error;
            hm = hm && rows[i].hj_residual_median < rows[i - 1].hj_residual_median;
            gm = gm && rows[i].g_eq_residual_median < rows[i - 1].g_eq_residual_median;
        }
        front_mono = fm;
        hj_mono = hm;
        g_eq_mono = gm;
        verdict = fm && hm;
    }

    json out = config_to_json(flags, sweep.base, seed);
    out["command"] = "sweep-epsilon";
    out.erase("epsilon"); // per-row below
    out["eps_list"] = eps_list;
    out["t_star"] = t_star;
    out["rows"] = rows_json;
    out["front_error_monotone"] = front_mono;
    out["hj_residual_monotone"] = hj_mono;
    out["g_eq_residual_monotone"] = g_eq_mono;
    out["verdict"] = verdict;
    out["outputs"] = {{"sweep_csv", csv_path}};
    out["wall_time_s"] = wall_seconds(start);
    write_json_file(join_path(out_dir, "sweep.json"), out);
    std::cout << out.dump(2) << '\n';
    return any_failed ? kExitNumerical : kExitOk;
}

struct ActionsFlags {
    std::vector<std::string> variants{"g1", "g2", "g3", "gaz"};
    double D = 1.0;
    double U = 1.0;
    double beta = 2.0;
    double v = 3.0;
    std::string branch = "minus";
    double x_min = 0.0;
    double x_max = 4.0;
    std::size_t nx = 81;
    double t_min = 1.0;
    double t_max = 1.0;
    std::size_t nt = 1;
};

int cmd_actions(const ActionsFlags& f, std::uint64_t seed, const std::string& out_dir) {
    const fkpp::PhysicalParams params{f.D, f.U};
    params.validate();
    if (!(f.nx >= 2) || !(f.x_max > f.x_min)) {
        throw fkpp::invalid_bounds_error("need x_max > x_min and nx >= 2");
    }
    if (f.nt < 1 || (f.nt > 1 && !(f.t_max > f.t_min))) {
        throw fkpp::invalid_bounds_error("need t_max > t_min when nt > 1");
    }

    json files = json::object();
    for (const std::string& variant : f.variants) {
        fkpp::exact::ActionFunctional g = [&] {
            if (variant == "g1") {
                return fkpp::exact::ActionFunctional::make_g1(params);
            }
            if (variant == "g2") {
                return fkpp::exact::ActionFunctional::make_g2(params, f.beta);
            }
            if (variant == "g3") {
                const fkpp::exact::Branch branch = f.branch == "plus"
                                                       ? fkpp::exact::Branch::plus
                                                       : fkpp::exact::Branch::minus;
                return fkpp::exact::ActionFunctional::make_g3(params, f.v, branch);
            }
            return fkpp::exact::ActionFunctional::make_g_az(params);
        }();

        std::vector<fkpp::io::ActionSample> samples;
        samples.reserve(f.nx * f.nt);
        for (std::size_t j = 0; j < f.nt; ++j) {
            const double t = f.nt == 1 ? f.t_min
                                       : f.t_min + (f.t_max - f.t_min) * static_cast<double>(j) /
                                             static_cast<double>(f.nt - 1);
            for (std::size_t i = 0; i < f.nx; ++i) {
                const double x = f.x_min + (f.x_max - f.x_min) * static_cast<double>(i) /
                                               static_cast<double>(f.nx - 1);
                samples.push_back({x, t, g.value(x, t)});
            }
        }
        const std::string path = join_path(out_dir, "actions_" + variant + ".csv");
        fkpp::io::write_action_table_csv(path, samples);
        files[variant] = path;
    }

    json meta{{"command", "actions"},
              {"seed", seed},
              {"params", {{"D", f.D}, {"U", f.U}}},
              {"variants", f.variants},
              {"beta", f.beta},
              {"v", f.v},
              {"branch", f.branch},
              {"x_min", f.x_min},
              {"x_max", f.x_max},
              {"nx", f.nx},
              {"t_min", f.t_min},
              {"t_max", f.t_max},
              {"nt", f.nt},
              {"outputs", files}};
    write_json_file(join_path(out_dir, "actions.meta.json"), meta);
    std::cout << meta.dump(2) << '\n';
    return kExitOk;
}

int cmd_compare_gaz(double D, double U, const std::string& out_dir) {
    const fkpp::PhysicalParams params{D, U};
    const fkpp::exact::GazMatchReport rep = fkpp::exact::g2_matching_beta(params);
    const fkpp::exact::ActionFunctional gaz = fkpp::exact::ActionFunctional::make_g_az(params);

    const json out{
        {"command", "compare-gaz"},
        {"D", D},
        {"U", U},
        {"paper_beta", rep.paper_beta},
        {"beta_minus_U", rep.beta_minus_U},
        {"paper_beta_valid", rep.paper_beta_valid},
        {"slope_matching_beta", rep.beta_slope},
        {"g2_time_coeff_at_beta_slope", rep.g2_time_coeff_at_beta_slope},
        {"derived_A", rep.derived.A},
        {"derived_B", rep.derived.B},
        {"printed_A", rep.printed.A},
        {"printed_B", rep.printed.B},
        {"time_coeff_matches_derived", rep.time_coeff_matches_derived},
        {"time_coeff_matches_printed", rep.time_coeff_matches_printed},
        {"hj_residual_of_printed_action", fkpp::exact::hj_residual_analytic(gaz, 1.0, 1.0)},
    };
    write_json_file(join_path(out_dir, "compare_gaz.json"), out);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reaction-diffusion front laboratory: exact kink checks, explicit "
                 "simulations, front-speed measurements, and hyperbolic-scaling sweeps. "
                 "Set FKPP_MAX_WORKERS to cap thread use."};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from an INI file (flags win)");

    std::uint64_t seed = 20240817;
    std::string out_dir = ".";
    app.add_option("--seed", seed, "Seed recorded in metadata and used by randomized checks")
        ->capture_default_str();
    app.add_option("--out-dir", out_dir, "Directory for CSV/JSON outputs")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run the analytic verification suite");

    SimFlags sim_flags;
    CLI::App* simulate = app.add_subcommand("simulate", "Integrate the scaled equation");
    add_sim_flags(simulate, sim_flags);

    SimFlags speed_flags;
    speed_flags.t_end = 100.0;
    speed_flags.x_max = 400.0;
    speed_flags.dx = 0.1;
    speed_flags.x0 = 20.0;
    speed_flags.output_every = 0.5;
    std::string trajectory_path;
    double level = 0.5;
    double fit_window = 0.5;
    CLI::App* front_speed =
        app.add_subcommand("front-speed", "Measure the front speed of a run");
    add_sim_flags(front_speed, speed_flags);
    front_speed->add_option("--trajectory", trajectory_path,
                            "Read a completed simulate CSV instead of running inline");
    front_speed->add_option("--level", level, "Crossing level tracked over time")
        ->capture_default_str();
    front_speed->add_option("--fit-window", fit_window, "Trailing fraction of samples to fit")
        ->capture_default_str();

    SimFlags sweep_flags;
    sweep_flags.x_min = -4.0;
    sweep_flags.x_max = 20.0;
    sweep_flags.dx = 0.0125;
    sweep_flags.t_end = 1.02;
    sweep_flags.output_every = 0.01;
    sweep_flags.ic = "tanh_front";
    sweep_flags.x0 = 0.0;
    sweep_flags.width = 0.0625;
    // Forward-Euler bias in the exponential tail grows like dt (U/eps)^2, so
    // sweeps reaching small eps default to a smaller fraction of the stable step.
    sweep_flags.safety = 0.2;
    std::vector<double> eps_list{0.4, 0.2, 0.1, 0.05};
    double t_star = 1.0;
    CLI::App* sweep =
        app.add_subcommand("sweep-epsilon", "Convergence study of the scaling limit");
    add_sim_flags(sweep, sweep_flags);
    sweep->get_option("--eps")->group(""); // per-row epsilons replace the single flag
    sweep->add_option("--eps-list", eps_list,
                      "Strictly decreasing epsilon values, e.g. 0.4,0.2,0.1")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--t-star", t_star, "Reference time for the front error")
        ->capture_default_str();

    ActionsFlags actions_flags;
    CLI::App* actions =
        app.add_subcommand("actions", "Tabulate the closed-form actions on an (x, t) grid");
    actions->add_option("--variants", actions_flags.variants,
                        "Which actions to tabulate (g1, g2, g3, gaz)")
        ->delimiter(',')
        ->check(CLI::IsMember({"g1", "g2", "g3", "gaz"}))
        ->capture_default_str();
    actions->add_option("--D", actions_flags.D, "Diffusion coefficient")->capture_default_str();
    actions->add_option("--U", actions_flags.U, "Reaction rate")->capture_default_str();
    actions->add_option("--beta", actions_flags.beta, "g2 parameter (must exceed U)")
        ->capture_default_str();
    actions->add_option("--v", actions_flags.v, "g3 speed (needs v^2 >= 4DU)")
        ->capture_default_str();
    actions->add_option("--branch", actions_flags.branch, "g3 momentum branch")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->capture_default_str();
    actions->add_option("--x-min", actions_flags.x_min)->capture_default_str();
    actions->add_option("--x-max", actions_flags.x_max)->capture_default_str();
    actions->add_option("--nx", actions_flags.nx)->capture_default_str();
    actions->add_option("--t-min", actions_flags.t_min)->capture_default_str();
    actions->add_option("--t-max", actions_flags.t_max)->capture_default_str();
    actions->add_option("--nt", actions_flags.nt)->capture_default_str();

    double gaz_D = 1.0, gaz_U = 1.0;
    CLI::App* compare =
        app.add_subcommand("compare-gaz", "Audit the published kink action against G2");
    compare->add_option("--D", gaz_D, "Diffusion coefficient")->capture_default_str();
    compare->add_option("--U", gaz_U, "Reaction rate")->capture_default_str();

    // Let --seed/--out-dir be written after the subcommand name too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*verify) {
            return cmd_verify(seed, out_dir);
        }
        if (*simulate) {
            return cmd_simulate(sim_flags, seed, out_dir);
        }
        if (*front_speed) {
            return cmd_front_speed(speed_flags, seed, out_dir, trajectory_path, level,
                                   fit_window);
        }
        if (*sweep) {
            return cmd_sweep_epsilon(sweep_flags, eps_list, t_star, seed, out_dir);
        }
        if (*actions) {
            return cmd_actions(actions_flags, seed, out_dir);
        }
        if (*compare) {
            return cmd_compare_gaz(gaz_D, gaz_U, out_dir);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
