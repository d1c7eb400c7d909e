"""End-to-end checks of the Python face of the core module."""

import math

import pytest

import fkpp


def test_constants():
    assert fkpp.KINK_SPEED == pytest.approx(5.0 / math.sqrt(6.0), rel=1e-15)
    assert fkpp.KINK_DECAY_RATE == pytest.approx(math.sqrt(2.0 / 3.0), rel=1e-15)


def test_kink_profile_and_ode():
    assert fkpp.az_profile(0.0) == pytest.approx(0.25, rel=1e-15)
    d1, d2 = fkpp.az_profile_derivs(0.0)
    assert d1 < 0.0
    assert abs(fkpp.traveling_ode_residual(fkpp.KINK_SPEED, 0.7)) <= 1e-12
    assert abs(fkpp.traveling_ode_residual(2.0, 0.7)) > 1e-3
    assert fkpp.az_local_decay_rate(40.0) == pytest.approx(fkpp.KINK_DECAY_RATE, rel=1e-6)
    assert d2 == pytest.approx(fkpp.az_profile_derivs(0.0)[1])


def test_closed_form_actions():
    assert fkpp.g1(2.0, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert fkpp.g3(5.0, 1.0, 2.0, "minus") == pytest.approx(3.0, rel=1e-12)
    g2 = fkpp.ActionFunctional.g2(beta=2.0)
    assert g2.slope() == pytest.approx(1.0, rel=1e-12)
    assert g2.time_coefficient() == pytest.approx(2.0, rel=1e-12)
    assert abs(fkpp.hj_residual(g2, 3.0, 2.0)) <= 1e-12
    gaz = fkpp.ActionFunctional.g_az()
    assert abs(fkpp.hj_residual(gaz, 3.0, 2.0)) > 0.5  # the audited defect

    with pytest.raises(ValueError):
        fkpp.g1(1.0, 0.0)  # needs t > 0
    with pytest.raises(ValueError):
        fkpp.ActionFunctional.g2(beta=0.5)  # needs beta > U


def test_momentum_and_speeds():
    p_minus, p_plus = fkpp.momentum_roots(2.0)
    assert p_minus == pytest.approx(1.0, rel=1e-12)
    assert p_plus == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        fkpp.momentum_roots(1.0)
    assert fkpp.min_front_speed() == pytest.approx(2.0, rel=1e-15)
    assert fkpp.min_front_speed(D=4.0) == pytest.approx(4.0, rel=1e-15)
    # A tail at the kink's rate selects the kink's speed.
    assert fkpp.tail_selected_speed(fkpp.KINK_DECAY_RATE) == pytest.approx(
        fkpp.KINK_SPEED, rel=1e-12
    )
    assert fkpp.tail_selected_speed(4.0) == pytest.approx(2.0, rel=1e-12)


def test_ansatz_and_audit():
    c, a, b, alpha = fkpp.ansatz_solved()
    assert (c, a, b, alpha) == (0.25, 2.0, -1.0, 1.0)
    report = fkpp.verify_ansatz(c, a, b, alpha)
    assert report["max_residual"] <= 1e-12
    assert report["n_samples"] > 1000
    assert fkpp.verify_ansatz(c, 2.1, b, alpha)["max_residual"] > 1e-3

    audit = fkpp.compare_gaz()
    assert not audit["paper_beta_valid"]
    assert audit["beta_minus_U"] < 0.0
    assert audit["slope_matching_beta"] == pytest.approx(5.0 / 3.0, rel=1e-12)
    assert audit["time_coeff_matches_derived"]
    assert not audit["time_coeff_matches_printed"]


def test_simulate_shapes_and_bounds():
    run = fkpp.simulate(x_max=20.0, n=401, t_end=1.0, ic="step", x0=5.0)
    assert run["t"][0] == 0.0
    assert len(run["rho"]) == len(run["t"])
    assert len(run["rho"][0]) == len(run["x"]) == 401
    assert run["dt_used"] > 0.0
    assert not run["front_near_boundary"]
    flat = [v for row in run["rho"] for v in row]
    assert min(flat) >= -1e-9
    assert max(flat) <= 1.0 + 1e-9

    with pytest.raises(ValueError):
        fkpp.simulate(eps=3.0)


def test_front_speed_of_tail_seeded_run():
    lam = fkpp.KINK_DECAY_RATE
    run = fkpp.simulate(
        x_max=80.0, n=1601, t_end=15.0, ic="exp_tail", x0=5.0, lam=lam, output_every=0.5
    )
    assert not run["front_near_boundary"]
    fit = fkpp.measure_front_speed(run["t"], run["x"], run["rho"])
    v_theory = fkpp.tail_selected_speed(lam)
    assert v_theory == pytest.approx(fkpp.KINK_SPEED, rel=1e-12)
    assert fit["speed"] == pytest.approx(v_theory, rel=2e-2)
    assert fit["n_used"] >= 10

    final = run["rho"][-1]
    rate = fkpp.decay_rate(run["x"], final)
    assert rate == pytest.approx(lam, rel=2e-2)


def test_action_transform_round_numbers():
    x = [0.0, 1.0, 2.0]
    rho = [1.0, math.exp(-2.0), math.exp(-4.0)]
    action = fkpp.action_from_field(x, rho, eps=0.5)
    assert action["G"] == pytest.approx([0.0, 1.0, 2.0], abs=1e-14)
    assert action["floor_applied"] == [0, 0, 0]
    assert fkpp.front_position(x, [1.0, 0.5, 0.0], 0.5) == pytest.approx(1.0, rel=1e-12)


def test_epsilon_sweep_rows():
    rows = fkpp.epsilon_sweep(
        [0.4, 0.2], x_min=-4.0, x_max=14.0, n=1441, t_end=0.55, width=0.1,
        output_every=0.01, t_star=0.5,
    )
    assert [r["epsilon"] for r in rows] == [0.4, 0.2]
    assert all(r["ok"] for r in rows)
    assert rows[1]["front_error"] < rows[0]["front_error"]
    assert rows[1]["hj_residual_median"] < rows[0]["hj_residual_median"]

    with pytest.raises(ValueError):
        fkpp.epsilon_sweep([0.2, 0.4])  # must be strictly decreasing


def test_verification_suite_passes():
    results = fkpp.run_verification()
    assert len(results) == 15
    names = [r["name"] for r in results]
    assert len(set(names)) == len(names)
    assert all(r["pass"] for r in results if not r["informational"])
    assert any(r["informational"] for r in results)
