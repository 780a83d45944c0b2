"""Weighted co-multiplication matrices on Z^n and their norm estimates.

Lattice points of the box I^n_d = {1..d}^n are ordered lexicographically
everywhere; Kronecker products of d x d matrices index the same way.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .lie_repr import DEFAULT_BUDGET, EnumerationBudgetError, count_dominant, enumerate_dominant, weyl_dimension

DEFAULT_SIZE_CAP = 4096


class SizeCapError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def box_l1_norms(n: int, d: int) -> np.ndarray:
    """||i||_1 for i in {1..d}^n, lexicographic order (last coordinate fastest)."""
    norms = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        norms = (norms[:, None] + np.arange(1, d + 1)[None, :]).ravel()
    return norms


def _check_size(n: int, d: int, cap: int) -> None:
    if d < 1:
        raise ValueError("box side d must be >= 1")
    if d**n > cap:
        raise SizeCapError(f"d^n = {d**n} rows exceeds size cap {cap}")


@dataclass
class MultiplierMatrix:
    n: int
    d: int
    alpha: float
    entries: np.ndarray = field(repr=False)

    def to_csv(self) -> str:
        return matrix_to_csv(self.entries)


def build_t_matrix(n: int, alpha: float, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> MultiplierMatrix:
    """T(i, j) = rho(i + j) / (rho(i) rho(j)) with rho(x) = (1 + ||x||_1)^alpha."""
    _check_size(n, d, size_cap)
    s = box_l1_norms(n, d).astype(np.float64)
    # coordinates are positive, so ||i + j|| = ||i|| + ||j||
    ratio = (1.0 + s[:, None] + s[None, :]) / ((1.0 + s[:, None]) * (1.0 + s[None, :]))
    return MultiplierMatrix(n, d, alpha, ratio**alpha)


def matrix_to_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    for row in np.atleast_2d(m):
        buf.write(",".join(f"{x:.17g}" for x in row))
        buf.write("\n")
    return buf.getvalue()


def operator_norm(m: np.ndarray, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Largest singular value by power iteration on M^T M from the all-ones vector."""
    m = np.asarray(m, dtype=np.float64)
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    if m.size == 0:
        return 0.0
    x = np.ones(m.shape[1])
    x /= np.linalg.norm(x)
    sigma = 0.0
    for _ in range(max_iter):
        y = m @ x
        new_sigma = float(np.linalg.norm(y))
        if new_sigma == 0.0:
            return 0.0
        z = m.T @ y
        z_norm = np.linalg.norm(z)
        x = z / z_norm
        if abs(new_sigma - sigma) <= tol * new_sigma:
            return new_sigma
        sigma = new_sigma
    raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps")


def littlewood_row_norm(m: np.ndarray) -> float:
    """sup over rows of the l2 norm of the row."""
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    return float(np.sqrt((m**2).sum(axis=1)).max())


def littlewood_col_norm(m: np.ndarray) -> float:
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    return float(np.sqrt((m**2).sum(axis=0)).max())


# --- Epstein sums -------------------------------------------------------------


def shell_count(n: int, r: int) -> int:
    """Number of i in Z^n with ||i||_1 = r."""
    if r == 0:
        return 1
    return sum(2**k * math.comb(n, k) * math.comb(r - 1, k - 1) for k in range(1, min(n, r) + 1))


@dataclass
class EpsteinResult:
    n: int
    alpha: float
    radius: int
    partial_sum: float
    tail_bound: float | None
    converged: bool

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "radius": self.radius,
            "partial_sum": self.partial_sum,
            "tail_bound": self.tail_bound,
            "converged": self.converged,
        }


def epstein_partial(n: int, alpha: float, radius: int) -> EpsteinResult:
    """Partial sum of (1 + ||i||_1)^(-2 alpha) over i in Z^n with ||i||_1 <= radius.

    The tail is bounded using #shell(r) <= 2^n (r + 1)^(n-1) and an integral
    comparison, valid when 2 alpha > n; otherwise the series diverges.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    r = np.arange(0, radius + 1, dtype=np.float64)
    counts = np.array([shell_count(n, k) for k in range(radius + 1)], dtype=np.float64)
    terms = counts * (1.0 + r) ** (-2.0 * alpha)
    partial = float(math.fsum(terms))
    if 2 * alpha > n:
        tail = 2.0**n * (1.0 + radius) ** (n - 2 * alpha) / (2 * alpha - n)
        return EpsteinResult(n, alpha, radius, partial, tail, True)
    return EpsteinResult(n, alpha, radius, partial, None, False)


# --- Littlewood decomposition -------------------------------------------------


@dataclass
class LittlewoodDecomposition:
    n: int
    d: int
    alpha: float
    u: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)
    S: np.ndarray = field(repr=False)
    column_norm: float
    reconstruction_error: float

    def pieces(self) -> tuple[np.ndarray, np.ndarray]:
        """U(i, j) = u_i and V(i, j) = v_j as dense matrices."""
        k = len(self.u)
        return np.repeat(self.u[:, None], k, axis=1), np.repeat(self.v[None, :], k, axis=0)


def littlewood_decompose(
    n: int, alpha: float, d: int, size_cap: int = DEFAULT_SIZE_CAP
) -> LittlewoodDecomposition:
    """Split T = S o (U + V) with u_i = (1 + ||i||)^(-alpha) and 0 < S <= 2^alpha."""
    T = build_t_matrix(n, alpha, d, size_cap).entries
    s = box_l1_norms(n, d).astype(np.float64)
    u = (1.0 + s) ** (-alpha)
    v = u.copy()
    S = T / (u[:, None] + v[None, :])
    cap = 2.0**alpha
    if not (np.all(S > 0) and np.all(S <= cap * (1 + 1e-14))):
        raise AssertionError(f"S outside (0, 2^alpha]: min {S.min()}, max {S.max()}")
    err = float(np.max(np.abs(S * (u[:, None] + v[None, :]) - T)))
    return LittlewoodDecomposition(n, d, alpha, u, v, S, float(np.sqrt(np.sum(u**2))), err)


# --- Rudin-Shapiro and Hankel sign matrices -----------------------------------

RS_MAX_K = 20
HANKEL_MAX_K = 12


@dataclass(frozen=True)
class RudinShapiroPair:
    k: int
    p: tuple[int, ...]
    q: tuple[int, ...]


def rudin_shapiro(k: int) -> RudinShapiroPair:
    if not 0 <= k <= RS_MAX_K:
        raise ValueError(f"k must be in [0, {RS_MAX_K}], got {k}")
    p, q = [1], [1]
    for _ in range(k):
        # P' = P + z^m Q, Q' = P - z^m Q with m = len(P); the variant
        # Q' = Q - z^m P does not preserve |P|^2 + |Q|^2 = 2^(k+1)
        p, q = p + q, p + [-c for c in q]
    return RudinShapiroPair(k, tuple(p), tuple(q))


@dataclass
class SupnormReport:
    k: int
    samples: int
    max_identity_error: float
    max_abs_p: float
    bound: float
    coefficients_pm1: bool

    @property
    def passed(self) -> bool:
        return self.max_identity_error <= 1e-9 and self.max_abs_p <= self.bound + 1e-9 and self.coefficients_pm1

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "samples": self.samples,
            "max_identity_error": self.max_identity_error,
            "max_abs_P": self.max_abs_p,
            "sup_bound": self.bound,
            "coefficients_pm1": self.coefficients_pm1,
        }


def circle_values(coeffs: Sequence[int], samples: int) -> np.ndarray:
    """Values sum_j c_j z^j at z = exp(2 pi i m / samples), m = 0..samples-1.

    Computed by FFT after folding exponents mod ``samples``; Horner evaluation
    loses about 1e-9 absolute accuracy at degree 4095.
    """
    folded = np.zeros(samples)
    np.add.at(folded, np.arange(len(coeffs)) % samples, np.asarray(coeffs, dtype=np.float64))
    return np.fft.ifft(folded) * samples


def supnorm_check(pair: RudinShapiroPair, samples: int = 4096) -> SupnormReport:
    """Evaluate P_k, Q_k at equispaced points of the unit circle."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    pz = circle_values(pair.p, samples)
    qz = circle_values(pair.q, samples)
    target = 2.0 ** (pair.k + 1)
    err = float(np.max(np.abs(np.abs(pz) ** 2 + np.abs(qz) ** 2 - target)))
    pm1 = all(c in (1, -1) for c in pair.p + pair.q)
    return SupnormReport(pair.k, samples, err, float(np.max(np.abs(pz))), math.sqrt(target), pm1)


@dataclass
class HankelSignMatrix:
    k: int
    d: int
    symbol: tuple[int, ...]
    entries: np.ndarray = field(repr=False)

    @property
    def norm_bound(self) -> float:
        return 2.0 * math.sqrt(self.d)


def hankel_sign_matrix(k: int) -> HankelSignMatrix:
    """d x d matrix (a_{i+j}), d = 2^k, with a_m the coefficient of z^m in P_{k+1}."""
    if not 0 <= k <= HANKEL_MAX_K:
        raise ValueError(f"k must be in [0, {HANKEL_MAX_K}], got {k}")
    d = 2**k
    a = np.array(rudin_shapiro(k + 1).p, dtype=np.float64)
    idx = np.arange(d)
    A = a[idx[:, None] + idx[None, :]]
    assert np.all(np.abs(A) == 1.0)
    assert all(np.all(A[i + 1, :-1] == A[i, 1:]) for i in range(d - 1))
    return HankelSignMatrix(k, d, tuple(int(c) for c in a[: 2 * d - 1]), A)


def kron_power(m: np.ndarray, n: int) -> np.ndarray:
    out = np.ones((1, 1))
    for _ in range(n):
        out = np.kron(out, m)
    return out


def op_norm_lower_bound(n: int, alpha: float, d: int) -> float:
    """2^-alpha d^(n/2) (sum_{i in I^n_d} (1 + ||i||)^(-2 alpha))^(1/2)."""
    s = box_l1_norms(n, d).astype(np.float64)
    return 2.0 ** (-alpha) * d ** (n / 2) * math.sqrt(math.fsum((1.0 + s) ** (-2.0 * alpha)))


@dataclass
class CertificateRow:
    d: int
    t_norm: float
    b_norm: float
    quotient: float
    op_norm_bound: float
    analytic_bound: float
    littlewood_norm: float

    def to_record(self) -> dict:
        return {
            "d": self.d,
            "T_op_norm": self.t_norm,
            "B_op_norm": self.b_norm,
            "quotient_L": self.quotient,
            "op_norm_lower_bound": self.op_norm_bound,
            "analytic_quotient_bound": self.analytic_bound,
            "littlewood_column_norm": self.littlewood_norm,
        }


@dataclass
class DivergenceCertificate:
    n: int
    alpha: float
    rows: list[CertificateRow]

    @property
    def op_norm_bound_holds(self) -> bool:
        return all(r.t_norm >= r.op_norm_bound * (1 - 1e-10) for r in self.rows)

    @property
    def quotient_bound_holds(self) -> bool:
        return all(r.quotient >= r.analytic_bound * (1 - 1e-10) for r in self.rows)

    @property
    def quotient_increasing(self) -> bool:
        qs = [r.quotient for r in self.rows]
        return all(b > a for a, b in zip(qs, qs[1:]))

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "rows": [r.to_record() for r in self.rows],
            "op_norm_bound_holds": self.op_norm_bound_holds,
            "quotient_bound_holds": self.quotient_bound_holds,
            "quotient_increasing": self.quotient_increasing,
        }


def divergence_certificate(
    n: int, alpha: float, d_list: Sequence[int], size_cap: int = DEFAULT_SIZE_CAP, tol: float = 1e-10
) -> DivergenceCertificate:
    """Per d: ||T_d||, ||B_d|| for B_d the n-fold Kronecker power of the Hankel sign matrix.

    L(d) = ||T_d|| / ||B_d|| bounds the Schur multiplier norm of T_d from below.
    With ||A_d|| <= 2 sqrt(d) the analytic bound on L(d) is
    2^(-alpha-n) (sum (1 + ||i||)^(-2 alpha))^(1/2).
    """
    rows = []
    for d in d_list:
        k = int(d).bit_length() - 1
        if d < 1 or 2**k != d:
            raise ValueError(f"d must be a power of two, got {d}")
        _check_size(n, d, size_cap)
        T = build_t_matrix(n, alpha, d, size_cap).entries
        A = hankel_sign_matrix(k).entries
        t_norm = operator_norm(T, tol)
        # ||A (x) ... (x) A|| = ||A||^n
        b_norm = operator_norm(A, tol) ** n
        dec = littlewood_decompose(n, alpha, d, size_cap)
        rows.append(
            CertificateRow(
                d=d,
                t_norm=t_norm,
                b_norm=b_norm,
                quotient=t_norm / b_norm,
                op_norm_bound=op_norm_lower_bound(n, alpha, d),
                analytic_bound=2.0 ** (-alpha - n) * dec.column_norm,
                littlewood_norm=dec.column_norm,
            )
        )
    return DivergenceCertificate(n, alpha, rows)


# --- tail sums over the dual of SU(n) -------------------------------------------


@dataclass
class GroupTailResult:
    n_su: int
    alpha: float
    lambda1_max: int
    shell_sums: list[float]
    partial_sums: list[float]
    shell_slope: float
    growth_exponent: float
    predicted_growth_exponent: float
    converges_predicted: bool
    converges_estimated: bool

    def to_record(self) -> dict:
        return {
            "n_su": self.n_su,
            "alpha": self.alpha,
            "lambda1_max": self.lambda1_max,
            "shell_sums": self.shell_sums,
            "partial_sums": self.partial_sums,
            "shell_slope": self.shell_slope,
            "growth_exponent": self.growth_exponent,
            "predicted_growth_exponent": self.predicted_growth_exponent,
            "converges_predicted": self.converges_predicted,
            "converges_estimated": self.converges_estimated,
        }


def group_littlewood_tail(
    n_su: int, alpha: float, lambda1_max: int, fit_from: float = 0.5, budget: int = DEFAULT_BUDGET
) -> GroupTailResult:
    """Partial sums of d_lam^2 / (1 + lam_1)^(2 alpha) over lam_1 <= m.

    The log-log slope of the shell sums (fixed lam_1 = m) is fitted over the
    upper part of the range.  Partial sums grow like m^(slope + 1), so the
    reported growth exponent is slope + 1; it is negative iff the series
    converges, with predicted value d(SU(n)) - 2 alpha = n^2 - 1 - 2 alpha.
    """
    if n_su < 2:
        raise ValueError("n_su must be >= 2")
    if lambda1_max < 4:
        raise ValueError("lambda1_max must be >= 4 for a slope fit")
    count = count_dominant(n_su, lambda1_max)
    if count > budget:
        raise EnumerationBudgetError("dominant weights", count, budget)
    shells = [0] * (lambda1_max + 1)
    for lam in enumerate_dominant(n_su, lambda1_max):
        shells[lam[0]] += weyl_dimension(n_su, lam) ** 2
    shell_sums = [s / (1.0 + m) ** (2 * alpha) for m, s in enumerate(shells)]
    partial = list(np.cumsum(shell_sums))
    lo = max(1, int(lambda1_max * fit_from))
    ms = np.arange(lo, lambda1_max + 1)
    slope = float(np.polyfit(np.log1p(ms), np.log(shell_sums[lo:]), 1)[0])
    dim_g = n_su * n_su - 1
    return GroupTailResult(
        n_su,
        alpha,
        lambda1_max,
        shell_sums,
        [float(x) for x in partial],
        slope,
        slope + 1.0,
        dim_g - 2 * alpha,
        2 * alpha > dim_g,
        slope + 1.0 < 0,
    )
