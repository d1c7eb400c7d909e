"""Reaction-diffusion front laboratory.

Thin Python face of the C++ core: the exact traveling kink and its
closed-form actions, explicit simulations of the scaled equation,
front-speed measurements, and the vanishing-scale convergence sweep.
"""

from ._core import (
    KINK_DECAY_RATE,
    KINK_SPEED,
    RHO_FLOOR,
    ActionFunctional,
    action_from_field,
    ansatz_solved,
    az_local_decay_rate,
    az_profile,
    az_profile_derivs,
    compare_gaz,
    decay_rate,
    derive_action_from_asymptotics,
    epsilon_sweep,
    front_position,
    g1,
    g2,
    g3,
    g_az,
    hj_residual,
    measure_front_speed,
    min_front_speed,
    momentum_roots,
    run_verification,
    simulate,
    tail_selected_speed,
    traveling_ode_residual,
    verify_ansatz,
)

__all__ = [
    "KINK_DECAY_RATE",
    "KINK_SPEED",
    "RHO_FLOOR",
    "ActionFunctional",
    "action_from_field",
    "ansatz_solved",
    "az_local_decay_rate",
    "az_profile",
    "az_profile_derivs",
    "compare_gaz",
    "decay_rate",
    "derive_action_from_asymptotics",
    "epsilon_sweep",
    "front_position",
    "g1",
    "g2",
    "g3",
    "g_az",
    "hj_residual",
    "measure_front_speed",
    "min_front_speed",
    "momentum_roots",
    "run_verification",
    "simulate",
    "tail_selected_speed",
    "traveling_ode_residual",
    "verify_ansatz",
]
