"""Smoke tests for the Python bindings."""

import math

import numpy as np
import pytest

import spinpair as sp


def test_pauli_algebra():
    sx = sp.pauli("x", 1)
    sy = sp.pauli("y", 1)
    sz = sp.pauli("z", 1)
    assert np.allclose(sx @ sy - sy @ sx, 2j * sz)
    assert np.allclose(sp.pauli("z", 1) @ sp.pauli("z", 2),
                       np.diag([1, -1, -1, 1]))


def test_tensor_set():
    sz_total = sp.pauli("z", 1) + sp.pauli("z", 2)
    for m in range(-2, 3):
        t = sp.build_t2(m)
        assert np.allclose(sz_total @ t - t @ sz_total, 2 * m * t, atol=1e-14)
        assert np.isclose(np.trace(t @ t.conj().T).real, 0.25)


def test_rates_formula():
    p = sp.PhysicalParams(J=1.0, M0=0.5, alpha=0.3, omega0=10.0, tau_c=0.1,
                          omega_d=1.0, theta=math.pi / 2, phi=0.0)
    r = sp.compute_rates(p)
    k2_expected = (15.0 / (32.0 * math.pi)) * 0.1 / 5.0
    assert r.kappa[1] == pytest.approx(0.0, abs=1e-15)
    assert r.kappa[2] == pytest.approx(k2_expected, rel=1e-12)


def test_liouvillian_preserves_trace():
    m = sp.Model.from_scaled(M0=0.9, alpha=0.5, kappa1_star=1.0, kappa2_star=0.5)
    gen = sp.assemble_liouvillian(m)
    tr = np.eye(4).reshape(-1, order="F")  # column stacking
    assert np.abs(tr @ gen).max() < 1e-12


def test_observable_round_trip():
    rng = np.random.default_rng(7)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    rho /= np.trace(rho)
    v = sp.rho_to_observables(rho)
    back = sp.observables_to_rho(v)
    assert np.abs(back - rho).max() < 1e-12


def test_singlet_storage_and_concurrence():
    singlet = sp.singlet_observables()
    assert sp.concurrence_guard(singlet).value == pytest.approx(1.0)

    m = sp.Model.from_scaled(M0=0.9, alpha=1.0, kappa1_star=1.0, kappa2_star=1.0)
    tr = sp.integrate_block(sp.build_block_system(m), singlet, 1e4,
                            sample_count=50)
    assert tr.states.shape == (50, 15)
    for row in tr.states:
        v = sp.ObservableVector.from_block_vector(row)
        rho = sp.observables_to_rho(v)
        assert sp.concurrence_wootters(rho).value == pytest.approx(1.0, abs=1e-8)


def test_steady_state_matches_closed_form():
    m = sp.Model.from_scaled(M0=0.9, alpha=0.5, kappa1_star=0.0, kappa2_star=0.0)
    ss = sp.steady_state(m, sp.ObservableVector())
    assert ss.values.Mz == pytest.approx(0.9, rel=1e-12)
    assert ss.values.Mzz == pytest.approx(0.2025, rel=1e-12)
    assert ss.values.Mc == pytest.approx(0.0, abs=1e-14)
    assert ss.mode == sp.SteadyStateMode.Regular


def test_representations_agree():
    m = sp.Model.from_scaled(M0=0.7, alpha=0.9999, kappa1_star=0.5,
                             kappa2_star=0.2)
    init = sp.dipolar_order_observables()
    block = sp.integrate_block(sp.build_block_system(m), init, 50.0,
                               tol=1e-11, sample_count=20)
    liou = sp.integrate_liouville(sp.assemble_liouvillian(m),
                                  sp.observables_to_rho(init), 50.0,
                                  tol=1e-11, sample_count=20)
    assert np.abs(block.states - liou.states).max() < 1e-8


def test_scenario_file_runner(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        '{"params": {"mode": "scaled", "M0": 0.9, "alpha": 1.0, '
        '"kappa1_star": 0.01, "kappa2_star": 0.01}, '
        '"initial_state": "dipolar_order", "t_end": 100.0, "sample_count": 40}'
    )
    sp.run_scenario_file(cfg, tmp_path / "out", "demo")
    csv = (tmp_path / "out" / "demo.csv").read_text().splitlines()
    assert csv[0].startswith("t,Mz,Mzz,Mc,")
    assert len(csv) == 41
