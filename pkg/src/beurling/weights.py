"""Weight families on the dual of SU(n) and scans of their defining inequalities.

Everything is evaluated in log space: ``evaluate_log_weight`` returns ln(omega(pi)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .lie_repr import (
    TensorDecomposition,
    Weight,
    enumerate_dominant,
    tensor_decompose,
    weyl_dimension,
)

Decomposer = Callable[[int, Weight, Weight], TensorDecomposition]

FAMILIES = ("dimension", "polynomial", "exponential")


@dataclass(frozen=True)
class WeightFamily:
    """One of d^a (dimension), (1 + tau)^a (polynomial) or exp(tau^b) (exponential)."""

    kind: str
    param: float

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown weight family {self.kind!r}; expected one of {FAMILIES}")
        if self.param < 0:
            raise ValueError(f"{self.kind} weight needs a non-negative parameter, got {self.param}")
        if self.kind == "exponential" and self.param > 1:
            raise ValueError(f"exponential weight needs exponent in [0, 1], got {self.param}")

    @classmethod
    def dimension(cls, alpha: float) -> WeightFamily:
        return cls("dimension", alpha)

    @classmethod
    def polynomial(cls, alpha: float) -> WeightFamily:
        return cls("polynomial", alpha)

    @classmethod
    def exponential(cls, beta: float) -> WeightFamily:
        return cls("exponential", beta)

    def log_of_length(self, tau: int) -> float:
        if self.kind == "polynomial":
            return self.param * math.log1p(tau)
        if self.kind == "exponential":
            # tau = 0 maps to 0 even when the exponent is 0, so omega(trivial) = 1
            return float(tau) ** self.param if tau > 0 else 0.0
        raise ValueError("dimension weights are not a function of length alone")

    def to_record(self) -> dict:
        return {"kind": self.kind, "param": self.param}


def evaluate_log_weight(family: WeightFamily, n: int, lam: Sequence[int]) -> float:
    if family.kind == "dimension":
        return family.param * math.log(weyl_dimension(n, lam))
    return family.log_of_length(lam[0] - lam[-1])


def _scan_triples(n: int, bound: int, decompose: Decomposer | None):
    decompose = decompose or tensor_decompose
    weights = list(enumerate_dominant(n, bound))
    for lam in weights:
        for mu in weights:
            for nu in decompose(n, lam, mu).terms:
                yield lam, mu, nu


@dataclass
class SubmultReport:
    family: WeightFamily
    n: int
    bound: int
    worst_slack: float
    witness: tuple[Weight, Weight, Weight] | None
    triples: int

    @property
    def passed(self) -> bool:
        return self.worst_slack <= 1e-12

    def to_record(self) -> dict:
        return {
            "family": self.family.to_record(),
            "n": self.n,
            "bound": self.bound,
            "worst_slack": self.worst_slack,
            "witness": _triple_record(self.witness),
            "triples": self.triples,
        }


def _triple_record(triple):
    if triple is None:
        return None
    return {k: list(v) for k, v in zip(("lambda", "mu", "nu"), triple)}


def submultiplicativity_scan(
    family: WeightFamily, n: int, bound: int, decompose: Decomposer | None = None
) -> SubmultReport:
    """Largest ln w(nu) - ln w(lam) - ln w(mu) over nu in lam (x) mu, lam_1, mu_1 <= bound."""
    cache: dict[Weight, float] = {}

    def lw(w: Weight) -> float:
        if w not in cache:
            cache[w] = evaluate_log_weight(family, n, w)
        return cache[w]

    worst, witness, count = -math.inf, None, 0
    # scan order is lexicographic in (lam, mu, nu), so strict ">" keeps the first maximizer
    for lam, mu, nu in _scan_triples(n, bound, decompose):
        count += 1
        slack = lw(nu) - lw(lam) - lw(mu)
        if slack > worst:
            worst, witness = slack, (lam, mu, nu)
    return SubmultReport(family, n, bound, worst, witness, count)


@dataclass
class Condition1Result:
    n: int
    bound: int
    empirical_c: float
    witness: tuple[Weight, Weight, Weight]
    exact: Fraction = field(repr=False)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "empirical_C": self.empirical_c,
            "empirical_C_exact": f"{self.exact.numerator}/{self.exact.denominator}",
            "witness": _triple_record(self.witness),
        }


def condition1_ratio(n: int, lam: Weight, mu: Weight, nu: Weight) -> Fraction:
    """[d_nu / (d_lam d_mu)] / [1/(lam_1+1) + 1/(mu_1+1)], exactly."""
    rel = Fraction(weyl_dimension(n, nu), weyl_dimension(n, lam) * weyl_dimension(n, mu))
    return rel / (Fraction(1, lam[0] + 1) + Fraction(1, mu[0] + 1))


def condition1_scan(n: int, bound: int, decompose: Decomposer | None = None) -> Condition1Result:
    if n < 2:
        raise ValueError("n must be >= 2")
    best, witness = Fraction(-1), None
    for lam, mu, nu in _scan_triples(n, bound, decompose):
        r = condition1_ratio(n, lam, mu, nu)
        if r > best:
            best, witness = r, (lam, mu, nu)
    return Condition1Result(n, bound, float(best), witness, best)


# --- exponential vs polynomial domination ----------------------------------


def beta_threshold(alpha: float) -> float:
    return max(1.0, 6.0 / (alpha * (1.0 - alpha)))


def _check_alpha_beta(alpha: float, beta: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if beta < beta_threshold(alpha):
        raise ValueError(
            f"beta={beta} violates beta >= max(1, 6/(alpha(1-alpha))) = {beta_threshold(alpha)}"
        )


def p_function(x, alpha: float, beta: float, c: float = 1.0):
    """p(x) = c x^alpha - beta ln(1 + x); works on scalars and numpy arrays."""
    return c * np.power(x, alpha) - beta * np.log1p(x)


@dataclass
class AppendixBConstants:
    alpha: float
    beta: float
    K: float
    ln_M: float
    scan_max: int
    argmax_t: int
    argmin_s: int
    c: float = 1.0

    def to_record(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "c": self.c,
            "K": self.K,
            "ln_M": self.ln_M,
            "scan_max": self.scan_max,
            "argmax_t": self.argmax_t,
            "argmin_s": self.argmin_s,
        }


def threshold_K(alpha: float, beta: float) -> float:
    return (beta**2 / (alpha * (1.0 - alpha))) ** (1.0 / alpha)


def appendix_b_constants(
    alpha: float, beta: float, c: float = 1.0, scan_max: int | None = None
) -> AppendixBConstants:
    """K and ln M = max p(t) - p(s) - p(r) over integers t, s, r in [0, 2K].

    The three arguments are independent, so ln M = max p - 2 min p.
    ``scan_max`` overrides the upper end of the integer range (default floor(2K)).
    """
    _check_alpha_beta(alpha, beta)
    K = threshold_K(alpha, beta)
    top = math.floor(2 * K) if scan_max is None else scan_max
    # chunked so that K ~ 10^7 stays within memory
    best_hi, arg_hi, best_lo, arg_lo = -math.inf, 0, math.inf, 0
    chunk = 1 << 20
    for start in range(0, top + 1, chunk):
        xs = np.arange(start, min(top + 1, start + chunk), dtype=np.float64)
        ps = p_function(xs, alpha, beta, c)
        i, j = int(np.argmax(ps)), int(np.argmin(ps))
        if ps[i] > best_hi:
            best_hi, arg_hi = float(ps[i]), start + i
        if ps[j] < best_lo:
            best_lo, arg_lo = float(ps[j]), start + j
    return AppendixBConstants(alpha, beta, K, best_hi - 2 * best_lo, top, arg_hi, arg_lo, c)


@dataclass
class MonotonicityReport:
    alpha: float
    beta: float
    grid: list[float]
    violation: dict | None

    @property
    def passed(self) -> bool:
        return self.violation is None

    def to_record(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "grid_points": len(self.grid),
            "grid_start": self.grid[0],
            "grid_stop": self.grid[-1],
            "violation": self.violation,
        }


def pq_monotonicity_check(
    alpha: float, beta: float, gridpoints: int = 1000, lo: float | None = None, hi: float | None = None
) -> MonotonicityReport:
    """p nondecreasing and q = p/x nonincreasing on a grid over [K, 10K] (default)."""
    _check_alpha_beta(alpha, beta)
    K = threshold_K(alpha, beta)
    lo = K if lo is None else lo
    hi = 10 * K if hi is None else hi
    xs = np.linspace(lo, hi, gridpoints)
    ps = p_function(xs, alpha, beta)
    qs = ps / xs
    violation = None
    for i in range(len(xs) - 1):
        if ps[i + 1] < ps[i]:
            violation = {"which": "p", "x": float(xs[i]), "x_next": float(xs[i + 1])}
            break
        if qs[i + 1] > qs[i]:
            violation = {"which": "q", "x": float(xs[i]), "x_next": float(xs[i + 1])}
            break
    return MonotonicityReport(alpha, beta, [float(x) for x in xs], violation)


@dataclass
class ExpDominationReport:
    n: int
    alpha: float
    beta: float
    bound: int
    ln_M: float
    worst_margin: float
    witness: tuple[Weight, Weight, Weight] | None
    triples: int

    @property
    def passed(self) -> bool:
        return self.worst_margin <= 2 * self.ln_M + 1e-9

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "beta": self.beta,
            "bound": self.bound,
            "ln_M": self.ln_M,
            "two_ln_M": 2 * self.ln_M,
            "worst_margin": self.worst_margin,
            "witness": _triple_record(self.witness),
            "triples": self.triples,
        }


def exp_domination_check(
    n: int,
    alpha: float,
    beta: float,
    bound: int,
    constants: AppendixBConstants | None = None,
    decompose: Decomposer | None = None,
) -> ExpDominationReport:
    """Check exp(tau^alpha) slack minus (1+tau)^beta slack <= 2 ln M over lam (x) mu."""
    _check_alpha_beta(alpha, beta)
    constants = constants or appendix_b_constants(alpha, beta)
    expo, poly = WeightFamily.exponential(alpha), WeightFamily.polynomial(beta)

    def diff(w: Weight) -> float:
        tau = w[0]
        return expo.log_of_length(tau) - poly.log_of_length(tau)

    worst, witness, count = -math.inf, None, 0
    for lam, mu, nu in _scan_triples(n, bound, decompose):
        count += 1
        margin = diff(nu) - diff(lam) - diff(mu)
        if margin > worst:
            worst, witness = margin, (lam, mu, nu)
    return ExpDominationReport(n, alpha, beta, bound, constants.ln_M, worst, witness, count)
