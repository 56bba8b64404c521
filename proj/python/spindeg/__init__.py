"""Degradability and capacity bounds for spin mixture and generalized Pauli channels."""

from ._core import (
    apply_kraus,
    capacity_curve,
    choi_matrix,
    coherent_info,
    complementary_kraus,
    delta_correction,
    diamond_norm,
    eta,
    fit_slope,
    gpc_kraus,
    ic_mls_pi,
    mls_kraus,
    optimal_a,
    scaling_sweep,
    singlet_state,
    spin_operators,
    vn_entropy,
)

__all__ = [
    "apply_kraus",
    "capacity_curve",
    "choi_matrix",
    "coherent_info",
    "complementary_kraus",
    "delta_correction",
    "diamond_norm",
    "eta",
    "fit_slope",
    "gpc_kraus",
    "ic_mls_pi",
    "mls_kraus",
    "optimal_a",
    "scaling_sweep",
    "singlet_state",
    "spin_operators",
    "vn_entropy",
]
