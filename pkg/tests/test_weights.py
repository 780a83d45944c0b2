from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from beurling import weights as w
from beurling.lie_repr import tensor_decompose


def test_evaluate_log_weight_examples():
    assert w.evaluate_log_weight(w.WeightFamily.dimension(1), 3, (1, 0, 0)) == pytest.approx(math.log(3))
    assert w.evaluate_log_weight(w.WeightFamily.polynomial(2), 3, (3, 1, 0)) == pytest.approx(2 * math.log(4))
    for fam in (w.WeightFamily.dimension(1.5), w.WeightFamily.polynomial(2), w.WeightFamily.exponential(0.5)):
        assert w.evaluate_log_weight(fam, 3, (0, 0, 0)) == 0


def test_family_validation():
    with pytest.raises(ValueError):
        w.WeightFamily("bogus", 1.0)
    with pytest.raises(ValueError):
        w.WeightFamily.dimension(-1)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 3.0])
def test_polynomial_submultiplicative(alpha):
    rep = w.submultiplicativity_scan(w.WeightFamily.polynomial(alpha), 3, 4)
    assert rep.passed and rep.worst_slack <= 0


def test_dimension_submultiplicative_su2():
    rep = w.submultiplicativity_scan(w.WeightFamily.dimension(1), 2, 10)
    assert rep.passed


def test_trivial_family_slack_zero():
    rep = w.submultiplicativity_scan(w.WeightFamily.polynomial(0), 3, 3)
    assert rep.worst_slack == 0


def test_condition1_su2_at_most_one():
    res = w.condition1_scan(2, 12)
    assert res.exact <= 1


def test_condition1_ratio_exact():
    r = w.condition1_ratio(3, (1, 0, 0), (1, 0, 0), (2, 0, 0))
    assert r == Fraction(6, 9) / Fraction(1, 1)


def test_condition1_su3_small():
    res = w.condition1_scan(3, 4)
    assert res.exact <= 3
    lam, mu, nu = res.witness
    assert nu in tensor_decompose(3, lam, mu).terms


def test_appendix_b_K():
    assert w.threshold_K(0.5, 24) == 5308416.0
    with pytest.raises(ValueError):
        w.appendix_b_constants(0.5, 10)
    with pytest.raises(ValueError):
        w.appendix_b_constants(1.0, 30)


def test_ln_M_nonnegative_and_matches_brute_force():
    # small explicit scan range so the brute force is cheap
    c = w.appendix_b_constants(0.5, 24, scan_max=5000)
    xs = np.arange(5001, dtype=float)
    ps = 1.0 * np.sqrt(xs) - 24 * np.log1p(xs)
    assert c.ln_M == pytest.approx(ps.max() - 2 * ps.min(), rel=1e-12)
    assert c.ln_M >= 0


def test_pq_monotonicity():
    assert w.pq_monotonicity_check(0.5, 24, 1000).passed


def test_pq_monotonicity_detects_violation_below_threshold():
    # near 0, p decreases, so the check must flag it
    rep = w.pq_monotonicity_check(0.5, 24, 100, lo=1.0, hi=100.0)
    assert not rep.passed


def test_exp_domination_trivial_pair():
    consts = w.appendix_b_constants(0.5, 24, scan_max=1000)
    rep = w.exp_domination_check(2, 0.5, 24, 0, consts)
    assert rep.worst_margin == 0 and rep.passed
