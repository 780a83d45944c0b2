from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beurling import multipliers as m


def test_t_matrix_alpha_zero_is_ones():
    t = m.build_t_matrix(2, 0.0, 3).entries
    assert t.shape == (9, 9) and np.all(t == 1)


def test_t_matrix_entries():
    t = m.build_t_matrix(1, 1.0, 2).entries
    # indices 1, 2
    assert t[0, 1] == pytest.approx(4 / (2 * 3))
    assert np.allclose(t, t.T)


def test_size_cap():
    with pytest.raises(m.SizeCapError):
        m.build_t_matrix(3, 1.0, 20, size_cap=1000)


def test_operator_norm_examples():
    assert m.operator_norm(np.eye(3)) == pytest.approx(1.0)
    u, v = np.array([1.0, 2.0, 2.0]), np.array([3.0, 4.0])
    assert m.operator_norm(np.outer(u, v)) == pytest.approx(15.0)
    t = m.build_t_matrix(1, 1.0, 2).entries
    bound = 0.5 * math.sqrt(2) * math.sqrt(1 / 4 + 1 / 9)
    assert m.operator_norm(t) >= bound
    assert m.op_norm_lower_bound(1, 1.0, 2) == pytest.approx(bound)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 64), st.integers(1, 64), st.integers(0, 2**31))
def test_operator_norm_matches_svd(rows, cols, seed):
    a = np.random.default_rng(seed).standard_normal((rows, cols))
    assert m.operator_norm(a) == pytest.approx(np.linalg.norm(a, 2), rel=1e-8)


def test_littlewood_norms():
    for d in (1, 3, 5):
        assert m.littlewood_row_norm(np.eye(d)) == pytest.approx(1)
        assert m.littlewood_col_norm(np.eye(d)) == pytest.approx(1)
        assert m.littlewood_row_norm(np.ones((d, d))) == pytest.approx(math.sqrt(d))
        assert m.littlewood_col_norm(np.ones((d, d))) == pytest.approx(math.sqrt(d))
    u = np.array([0.5, 0.25, 0.1])
    U = np.repeat(u[:, None], 3, axis=1)
    assert m.littlewood_row_norm(U) == pytest.approx(math.sqrt(3) * 0.5)
    assert m.littlewood_col_norm(U) == pytest.approx(np.linalg.norm(u))


def test_shell_count_brute_force():
    for n in (1, 2, 3):
        for rad in range(6):
            pts = np.array(np.meshgrid(*[np.arange(-rad, rad + 1)] * n)).reshape(n, -1)
            assert m.shell_count(n, rad) == int(np.sum(np.abs(pts).sum(axis=0) == rad))


def test_epstein():
    assert m.epstein_partial(2, 2.0, 0).partial_sum == 1
    res = m.epstein_partial(1, 1.0, 10_000)
    assert abs(res.partial_sum - (math.pi**2 / 3 - 1)) < 1e-3
    assert abs(res.partial_sum - (math.pi**2 / 3 - 1)) <= res.tail_bound
    assert not m.epstein_partial(2, 1.0, 100).converged


def test_littlewood_decomposition():
    dec = m.littlewood_decompose(1, 1.0, 8)
    assert dec.reconstruction_error < 1e-14
    assert np.all(dec.S > 0) and np.all(dec.S <= 2.0)
    s = np.arange(1, 9)
    assert dec.column_norm == pytest.approx(math.sqrt(np.sum((1.0 + s) ** -2.0)))
    U, V = dec.pieces()
    assert np.allclose(dec.S * (U + V), m.build_t_matrix(1, 1.0, 8).entries)


def test_rudin_shapiro_examples():
    assert m.rudin_shapiro(0).p == (1,) and m.rudin_shapiro(0).q == (1,)
    assert m.rudin_shapiro(1).p == (1, 1) and m.rudin_shapiro(1).q == (1, -1)
    assert m.rudin_shapiro(2).p == (1, 1, 1, -1)


def test_supnorm_k10():
    rep = m.supnorm_check(m.rudin_shapiro(10), 4096)
    assert rep.passed
    assert rep.max_abs_p <= math.sqrt(2048)


def test_hankel_examples():
    h0 = m.hankel_sign_matrix(0)
    assert h0.entries.tolist() == [[1]]
    h1 = m.hankel_sign_matrix(1)
    assert h1.entries.tolist() == [[1, 1], [1, 1]]
    assert m.operator_norm(h1.entries) == pytest.approx(2.0)
    for k in range(11):
        h = m.hankel_sign_matrix(k)
        assert m.operator_norm(h.entries) <= h.norm_bound * (1 + 1e-12)


def test_kron_power_norm():
    a = m.hankel_sign_matrix(2).entries
    b = m.kron_power(a, 2)
    assert m.operator_norm(b) == pytest.approx(m.operator_norm(a) ** 2)


def test_csv_dump():
    t = m.build_t_matrix(1, 0.5, 3)
    rows = t.to_csv().strip().splitlines()
    assert len(rows) == 3
    vals = np.array([[float(x) for x in row.split(",")] for row in rows])
    assert np.allclose(vals, t.entries, rtol=1e-15)


def test_group_tail_su2():
    res = m.group_littlewood_tail(2, 2.0, 100)
    assert res.growth_exponent < 0 and res.converges_predicted
    res = m.group_littlewood_tail(2, 0.75, 100)
    assert res.growth_exponent >= 0 and not res.converges_predicted
