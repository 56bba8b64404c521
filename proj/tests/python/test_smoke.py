import math

import numpy as np
import pytest

import spindeg


def test_spin_operators_satisfy_the_algebra():
    j1, j2, j3 = spindeg.spin_operators(1.5)
    assert j1.shape == (4, 4)
    for op in (j1, j2, j3):
        assert np.allclose(op, op.conj().T)
        assert abs(np.trace(op)) < 1e-12
    casimir = j1 @ j1 + j2 @ j2 + j3 @ j3
    assert np.allclose(casimir, 1.5 * 2.5 * np.eye(4), atol=1e-12)
    assert np.allclose(j1 @ j2 - j2 @ j1, 1j * j3, atol=1e-12)


def test_singlet_state_is_normalized():
    psi = spindeg.singlet_state(1.0)
    assert psi.shape == (9, 1)
    assert abs(np.vdot(psi, psi) - 1.0) < 1e-12


def test_channels_are_trace_preserving():
    for kraus in (spindeg.mls_kraus(1.0, 0.3), spindeg.gpc_kraus(3, 0.1)):
        d = kraus[0].shape[1]
        acc = sum(k.conj().T @ k for k in kraus)
        assert np.allclose(acc, np.eye(d), atol=1e-12)


def test_apply_and_complementary_agree_with_numpy():
    kraus = spindeg.mls_kraus(1.0, 0.2)
    rho = np.diag([0.5, 0.3, 0.2]).astype(complex)
    out = spindeg.apply_kraus(kraus, rho)
    ref = sum(k @ rho @ k.conj().T for k in kraus)
    assert np.allclose(out, ref, atol=1e-14)

    env = spindeg.apply_kraus(spindeg.complementary_kraus(kraus), np.eye(3) / 3)
    assert np.allclose(env, np.diag([0.8, 0.2 / 3, 0.2 / 3, 0.2 / 3]), atol=1e-12)


def test_diamond_norm_of_a_difference_map():
    p = 0.3
    noisy = spindeg.choi_matrix(spindeg.mls_kraus(1.0, p))
    ident = spindeg.choi_matrix([np.eye(3, dtype=complex)])
    value = spindeg.diamond_norm(noisy - ident, d_in=3, d_out=3)
    assert value == pytest.approx(2 * p, abs=1e-6)


def test_eta_improves_with_the_optimal_weight():
    a_opt = spindeg.optimal_a("mls", j=1.0)
    assert a_opt == pytest.approx(1.0)
    tuned = spindeg.eta("mls", p=0.05, a=a_opt, j=1.0)
    plain = spindeg.eta("mls", p=0.05, a=0.0, j=1.0)
    assert tuned["eta_lower"] <= tuned["eta"] <= tuned["eta_upper"]
    assert tuned["eta"] < plain["eta"]


def test_closed_form_coherent_information():
    p = 0.1
    expected = math.log2(3) + 0.9 * math.log2(0.9) + p * math.log2(p / 3)
    assert spindeg.ic_mls_pi(1.0, p) == pytest.approx(expected, abs=1e-12)
    kraus = spindeg.mls_kraus(1.0, p)
    assert spindeg.coherent_info(kraus, np.eye(3) / 3) == pytest.approx(expected, abs=1e-10)


def test_capacity_curve_reports_a_positive_gap():
    grid = [1e-3, 1e-2, 1e-1]
    curve = spindeg.capacity_curve(1.0, grid, "optimal")
    assert [row["p"] for row in curve] == grid
    for row in curve:
        assert row["lower_bound"] <= row["ic"]
        assert row["delta"] > 0


def test_fit_slope_sees_the_quadratic_law():
    grid = [10 ** (-3 + 0.5 * i) for i in range(5)]
    fit = spindeg.fit_slope("mls", grid, a=1.0, j=1.0)
    assert 1.9 < fit["slope"] < 2.1
    assert fit["points"] == 5
