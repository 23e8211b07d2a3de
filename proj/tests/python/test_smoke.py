"""Smoke tests of the Python bindings against frozen reference values."""

import cmath
import math

import pytest

import twistknot as tk


def test_jones_trivial_color():
    assert tk.jones(6, 1).value == 1 + 0j


def test_jones_small_color():
    # Frozen reference computed with 50-digit interval arithmetic.
    v = tk.jones(6, 2).value
    assert abs(v - (0.3090169943749474241 + 2.1266270208800998305j)) < 1e-12


def test_jones_rejects_bad_color():
    with pytest.raises(tk.DomainError):
        tk.jones(6, 0)


def test_critical_growth_constant():
    cd = tk.critical(6)
    assert abs(2 * math.pi * cd.zeta_R - 3.58891391779) < 1e-6
    assert cd.residual < 1e-10


def test_volume_channel_agrees_with_critical_channel():
    cd = tk.critical(8)
    gs = tk.gluing(8)
    assert abs(gs.volcs.real - 2 * math.pi * cd.zeta_R) < 1e-10


def test_series_matches_solved_constant_at_large_p():
    cd = tk.critical(200)
    assert abs(tk.zeta_R_series(200) - 2 * math.pi * cd.zeta_R) < 1e-9


def test_ratio_approaches_one():
    model = tk.make_model(6)
    r = tk.ratio(model, 60)
    assert abs(r - 1) < 0.25


def test_hhat_antisymmetric_coefficient_vanishes():
    c = tk.hhat(6, 8, m=0, n=-1)
    assert abs(c.value) <= max(c.quad_error, 1e-8)


def test_convergence_rows():
    rows = tk.convergence(6, [20, 40])
    assert [r.N for r in rows] == [20, 40]
    assert abs(rows[1].gap) < abs(rows[0].gap)
