"""Restriction of SU(n) weights to the maximal torus H_n = T^(n-1).

The restricted weight of a torus character chi_P is the infimum of omega(pi_lam)
over all lam whose restriction to H_n contains chi_P.  For the three standard
families that infimum is a minimum over a finite, certified search range.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .lie_repr import (
    DEFAULT_BUDGET,
    EnumerationBudgetError,
    Weight,
    contains_character,
    count_dominant,
    enumerate_dominant,
    superfactorial,
    weyl_dimension,
)
from .weights import WeightFamily, evaluate_log_weight

LOG_TOL = 1e-12


def l1(P: Sequence[int]) -> int:
    return sum(abs(p) for p in P)


def witness_lambda(n: int, P: Sequence[int]) -> Weight:
    """The one-row weight lam_P = (sum p_i + n |p_min|, 0, ..., 0) containing chi_P."""
    P = sorted((int(p) for p in P), reverse=True)
    if len(P) != n - 1:
        raise ValueError(f"torus character needs {n - 1} entries, got {P}")
    return (sum(P) + n * abs(P[-1]),) + (0,) * (n - 1)


def torus_characters(n: int, max_l1: int) -> Iterator[Weight]:
    """All P in Z^(n-1) with sum |p_i| <= max_l1, in lexicographic order."""
    rng = range(-max_l1, max_l1 + 1)
    for P in itertools.product(rng, repeat=n - 1):
        if l1(P) <= max_l1:
            yield P


@dataclass(frozen=True)
class EquivalenceConstants:
    n: int
    c_n: Fraction
    d_n: Fraction

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "c_n": f"{self.c_n.numerator}/{self.c_n.denominator}",
            "d_n": f"{self.d_n.numerator}/{self.d_n.denominator}",
        }


def equivalence_constants(n: int) -> EquivalenceConstants:
    c_n = Fraction(1, (n * n) ** (n - 1) * 2 ** (n - 2) * superfactorial(n))
    d_n = Fraction((n + 1) ** (n - 1), math.factorial(n - 1))
    return EquivalenceConstants(n, c_n, d_n)


@dataclass(frozen=True)
class RestrictedWeightValue:
    P: Weight
    family: WeightFamily
    value: float  # ln of the infimum
    minimizer: Weight
    search_bound: int

    def to_record(self) -> dict:
        return {
            "P": list(self.P),
            "family": self.family.to_record(),
            "ln_value": self.value,
            "minimizer": list(self.minimizer),
            "search_bound": self.search_bound,
        }


def _check_budget(n: int, bound: int, budget: int) -> None:
    count = count_dominant(n, bound)
    if count > budget:
        raise EnumerationBudgetError("restriction search", count, budget)


@lru_cache(maxsize=None)
def _min_length(n: int, P: Weight, budget: int) -> tuple[Weight, int]:
    # omega depends on lam_1 only and increases with it, so the first level
    # containing chi_P is optimal; lam_P bounds the search.
    bound = witness_lambda(n, P)[0]
    _check_budget(n, bound, budget)
    for lam in enumerate_dominant(n, bound):
        if contains_character(n, lam, P):
            return lam, bound
    raise AssertionError(f"witness {witness_lambda(n, P)} failed to contain {P}")


def dimension_cutoff(n: int, dim_bound: int) -> int:
    """Largest lam_1 that can still have d_lam <= dim_bound.

    Uses d_lam >= (lam_1 + 1)^(n-1) / (2^(n-2) prod_{i<j} (j - i)).
    """
    cap = dim_bound * 2 ** (n - 2) * superfactorial(n)
    root = int(round(cap ** (1.0 / (n - 1))))
    while (root + 1) ** (n - 1) <= cap:
        root += 1
    while root ** (n - 1) > cap:
        root -= 1
    return root - 1


@lru_cache(maxsize=None)
def _min_dimension(n: int, P: Weight, budget: int) -> tuple[Weight, int, int]:
    best_dim = weyl_dimension(n, witness_lambda(n, P))
    bound = dimension_cutoff(n, best_dim)
    _check_budget(n, bound, budget)
    best: Weight | None = None
    # lexicographic scan with strict "<" keeps the lex-first minimizer
    for lam in enumerate_dominant(n, bound):
        d = weyl_dimension(n, lam)
        if (best is None and d <= best_dim) or d < best_dim:
            if contains_character(n, lam, P):
                best, best_dim = lam, d
    assert best is not None
    return best, best_dim, bound


def restricted_weight(
    n: int, family: WeightFamily, P: Sequence[int], budget: int = DEFAULT_BUDGET
) -> RestrictedWeightValue:
    P = tuple(int(p) for p in P)
    if len(P) != n - 1:
        raise ValueError(f"torus character needs {n - 1} entries, got {P}")
    if family.kind == "dimension":
        lam, _, bound = _min_dimension(n, P, budget)
    else:
        lam, bound = _min_length(n, P, budget)
    return RestrictedWeightValue(P, family, evaluate_log_weight(family, n, lam), lam, bound)


# --- two-sided bound checks -------------------------------------------------


@dataclass
class BoundsReport:
    kind: str
    n: int
    alpha: float
    max_l1: int
    checked: int
    worst_lower_margin: float
    worst_lower_P: Weight | None
    worst_upper_margin: float
    worst_upper_P: Weight | None
    violations: list[dict]
    constants: dict

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "alpha": self.alpha,
            "max_l1": self.max_l1,
            "checked": self.checked,
            "constants": self.constants,
            "worst_lower_margin": self.worst_lower_margin,
            "worst_lower_P": list(self.worst_lower_P) if self.worst_lower_P else None,
            "worst_upper_margin": self.worst_upper_margin,
            "worst_upper_P": list(self.worst_upper_P) if self.worst_upper_P else None,
            "violations": self.violations,
        }


def _bounds_scan(kind, n, alpha, max_l1, family, ln_lower, ln_upper, constants, budget):
    """Margins are log-differences: value - ln(lower) and ln(upper) - value."""
    lo_worst, lo_P, hi_worst, hi_P = math.inf, None, math.inf, None
    violations, checked = [], 0
    for P in torus_characters(n, max_l1):
        checked += 1
        rv = restricted_weight(n, family, P, budget)
        lo = rv.value - ln_lower(P)
        hi = ln_upper(P) - rv.value
        if lo < lo_worst:
            lo_worst, lo_P = lo, P
        if hi < hi_worst:
            hi_worst, hi_P = hi, P
        if lo < -LOG_TOL or hi < -LOG_TOL:
            violations.append({"P": list(P), "lower_margin": lo, "upper_margin": hi})
    return BoundsReport(
        kind, n, alpha, max_l1, checked, lo_worst, lo_P, hi_worst, hi_P, violations, constants
    )


def check_dim_restriction_bounds(
    n: int, alpha: float, max_l1: int, budget: int = DEFAULT_BUDGET
) -> BoundsReport:
    """c_n^a rho_{(n-1)a}(P) <= restricted d^a <= d_n^a rho_{(n-1)a}(P)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    consts = equivalence_constants(n)
    ln_c, ln_d = math.log(consts.c_n), math.log(consts.d_n)
    k = (n - 1) * alpha
    return _bounds_scan(
        "dimension",
        n,
        alpha,
        max_l1,
        WeightFamily.dimension(alpha),
        lambda P: alpha * ln_c + k * math.log1p(l1(P)),
        lambda P: alpha * ln_d + k * math.log1p(l1(P)),
        consts.to_record(),
        budget,
    )


def check_poly_restriction_bounds(
    n: int, alpha: float, max_l1: int, budget: int = DEFAULT_BUDGET
) -> BoundsReport:
    """n^(-2a) rho_a(P) <= restricted (1 + lam_1)^a <= (n + 1)^a rho_a(P)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    return _bounds_scan(
        "polynomial",
        n,
        alpha,
        max_l1,
        WeightFamily.polynomial(alpha),
        lambda P: alpha * (math.log1p(l1(P)) - 2 * math.log(n)),
        lambda P: alpha * (math.log1p(l1(P)) + math.log(n + 1)),
        {"lower": f"1/{n}^(2a)", "upper": f"{n + 1}^a"},
        budget,
    )


@dataclass
class ExpRestrictionReport:
    n: int
    p_max: int
    rows: list[dict]

    @property
    def passed(self) -> bool:
        return all(r["exact"] for r in self.rows)

    def to_record(self) -> dict:
        return {"n": self.n, "p_max": self.p_max, "rows": self.rows}


def exp_restriction_witness(n: int, p: int) -> Weight:
    """A weight with lam_1 = |p| containing chi_(p, 0, ..., 0)."""
    if p >= 0:
        return (p,) + (0,) * (n - 1)
    # content (0, |p|, ..., |p|) fills n-1 full rows of length |p|
    return (-p,) * (n - 1) + (0,)


def check_exp_restriction(n: int, p_max: int, budget: int = DEFAULT_BUDGET) -> ExpRestrictionReport:
    """Restricted ln exp(tau) at P = (p, 0, ..., 0) equals |p| for |p| <= p_max."""
    family = WeightFamily.exponential(1.0)
    rows = []
    for p in range(-p_max, p_max + 1):
        P = (p,) + (0,) * (n - 2)
        rv = restricted_weight(n, family, P, budget)
        witness = exp_restriction_witness(n, p)
        lam1 = rv.minimizer[0]
        rows.append(
            {
                "p": p,
                "min_lambda_1": lam1,
                "minimizer": list(rv.minimizer),
                "ln_value": rv.value,
                "witness": list(witness),
                "witness_contains": contains_character(n, witness, P),
                # lower bound: t_1, t_n <= lam_1 for every containing lam
                "exact": lam1 == abs(p) and contains_character(n, witness, P),
            }
        )
    return ExpRestrictionReport(n, p_max, rows)
