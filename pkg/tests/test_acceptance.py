"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run under pytest (lines are collected into the terminal summary) or directly
with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from beurling import lie_repr, multipliers, restriction, weights  # noqa: E402
from beurling.cache import LRCache  # noqa: E402
from oracles import tensor_oracle  # noqa: E402

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # pragma: no cover
    ACCEPTANCE_LINES = []


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_lr_vs_character_oracle():
    start = time.perf_counter()
    mismatches, dim_errors, pairs = [], 0, 0
    for n in (2, 3):
        ws = list(lie_repr.enumerate_dominant(n, 6))
        for lam in ws:
            for mu in ws:
                pairs += 1
                dec = lie_repr.tensor_decompose(n, lam, mu)
                if dec.terms != tensor_oracle(n, lam, mu):
                    mismatches.append((n, lam, mu))
                total, prod = dec.dimension_check()
                dim_errors += total != prod
    elapsed = time.perf_counter() - start
    ok = not mismatches and dim_errors == 0 and elapsed < 60
    record(1, ok, f"{pairs} pairs, {len(mismatches)} mismatches, {dim_errors} dimension errors, {elapsed:.1f}s")


def test_criterion_02_condition1(tmp_path):
    start = time.perf_counter()
    cache = LRCache(tmp_path)
    res = weights.condition1_scan(3, 8, cache.decompose)
    elapsed = time.perf_counter() - start
    ok = res.exact <= 3 and elapsed < 300
    record(2, ok, f"empirical_C = {res.exact} = {res.empirical_c:.6g} at {res.witness}, {elapsed:.1f}s")


def test_criterion_03_dimension_restriction():
    parts, ok = [], True
    for n in (2, 3):
        for alpha in (0.5, 1.0):
            rep = restriction.check_dim_restriction_bounds(n, alpha, 12)
            ok &= rep.passed
            parts.append(f"n={n} a={alpha}: {len(rep.violations)}/{rep.checked}")
    record(3, ok, "violations " + "; ".join(parts))


def test_criterion_04_polynomial_restriction():
    parts, ok = [], True
    for n in (2, 3):
        for alpha in (0.5, 1.0):
            rep = restriction.check_poly_restriction_bounds(n, alpha, 12)
            ok &= rep.passed
            parts.append(f"n={n} a={alpha}: {len(rep.violations)}/{rep.checked}")
    record(4, ok, "violations " + "; ".join(parts))


def test_criterion_05_exponential_restriction():
    ok, checked = True, 0
    for n in (3, 4):
        rep = restriction.check_exp_restriction(n, 10)
        checked += len(rep.rows)
        ok &= rep.passed and all(r["min_lambda_1"] == abs(r["p"]) for r in rep.rows)
    record(5, ok, f"{checked} characters, restricted lambda_1 == |p| for all: {ok}")


def test_criterion_06_rudin_shapiro():
    worst_identity, ok = 0.0, True
    for k in range(13):
        rep = multipliers.supnorm_check(multipliers.rudin_shapiro(k), 4096)
        worst_identity = max(worst_identity, rep.max_identity_error)
        ok &= rep.max_identity_error <= 1e-9 and rep.coefficients_pm1
        ok &= rep.max_abs_p <= math.sqrt(2 ** (k + 1)) * (1 + 1e-12)
    record(6, ok, f"k=0..12, max identity error {worst_identity:.3g}")


def test_criterion_07_torus_lower_bound():
    violations, worst = 0, math.inf
    for n in (1, 2):
        for alpha in (0.5, 1.0, 2.0):
            cert = multipliers.divergence_certificate(n, alpha, [2, 4, 8, 16])
            for row in cert.rows:
                rel = row.t_norm / row.op_norm_bound - 1
                worst = min(worst, rel)
                violations += rel < -1e-10
    record(7, violations == 0, f"{violations} violations, smallest relative margin {worst:.3g}")


def test_criterion_08_phase_check():
    d_list = [2**j for j in range(1, 10)]
    cert = multipliers.divergence_certificate(1, 0.5, d_list)
    qs = [r.quotient for r in cert.rows]
    increasing = cert.quotient_increasing
    doubled = qs[-1] > 2 * qs[0]
    dips = [(a.d, b.d) for a, b in zip(cert.rows, cert.rows[1:]) if b.quotient <= a.quotient]
    norms = [multipliers.littlewood_decompose(1, 2.0, d).column_norm for d in d_list]
    last_step = norms[-1] - norms[-2]
    cauchy = 0 <= last_step < 1e-4
    ok = increasing and doubled and cauchy
    detail = (
        f"alpha=1/2 L(d) {qs[0]:.4g}->{qs[-1]:.4g} (x{qs[-1] / qs[0]:.3g}), strictly increasing: {increasing}"
        f" (non-increasing steps at d {dips}); alpha=2 last Littlewood step {last_step:.3g}"
    )
    record(8, ok, detail)


def test_criterion_09_epstein():
    disagreements = []
    for n in (1, 2, 3):
        for alpha in np.arange(0.25, 3.0001, 0.25):
            res = multipliers.epstein_partial(n, float(alpha), 200)
            if res.converged != (alpha > n / 2):
                disagreements.append((n, float(alpha)))
    basel = multipliers.epstein_partial(1, 1.0, 10_000).partial_sum
    err = abs(basel - (math.pi**2 / 3 - 1))
    ok = not disagreements and err < 1e-3
    record(9, ok, f"{len(disagreements)} flag disagreements; n=1 a=1 error {err:.3g}")


def test_criterion_10_appendix_b():
    start = time.perf_counter()
    consts = weights.appendix_b_constants(0.5, 24)
    mono = weights.pq_monotonicity_check(0.5, 24, 1000)
    su2 = weights.exp_domination_check(2, 0.5, 24, 40, consts)
    su3 = weights.exp_domination_check(3, 0.5, 24, 8, consts)
    ok = consts.K == 5308416 and mono.passed and su2.passed and su3.passed
    record(
        10,
        ok,
        f"K={consts.K:.0f} lnM={consts.ln_M:.6g} monotone={mono.passed} "
        f"SU(2) margin {su2.worst_margin:.4g}, SU(3) margin {su3.worst_margin:.4g} "
        f"<= 2lnM {2 * consts.ln_M:.6g}; {time.perf_counter() - start:.1f}s",
    )


def test_criterion_11_group_tails():
    su2 = {a: multipliers.group_littlewood_tail(2, a, 200).growth_exponent for a in (0.75, 2.0)}
    su3 = {a: multipliers.group_littlewood_tail(3, a, 200).growth_exponent for a in (3.0, 3.5, 4.5, 5.0)}
    ok = su2[2.0] < 0 <= su2[0.75]
    ok &= all(su3[a] >= 0 for a in (3.0, 3.5)) and all(su3[a] < 0 for a in (4.5, 5.0))
    fmt = lambda d: ", ".join(f"a={a}: {v:+.3f}" for a, v in d.items())
    record(11, ok, f"SU(2) {fmt(su2)}; SU(3) {fmt(su3)}")


CLI_RUNS = [
    ["dim", "--n", "3", "--lambda", "4,2,0"],
    ["tensor", "--n", "3", "--lhs", "2,1,0", "--rhs", "1,1,0"],
    ["restrict", "--n", "3", "--bound", "6", "--alpha", "0.5"],
    ["condition1", "--n", "3", "--bound", "4"],
    ["submult", "--n", "3", "--bound", "4", "--family", "polynomial", "--alpha", "2"],
    ["appendix-b", "--alpha", "0.5", "--beta", "24", "--n", "2", "--bound", "10"],
    ["epstein", "--n", "2", "--alpha", "1.5", "--radius", "500"],
    ["rudin-shapiro", "--k", "10"],
    ["torus-norms", "--n", "2", "--alpha", "1", "--d-list", "2,4,8"],
    ["group-tail", "--n", "3", "--alpha", "4.5", "--bound", "60"],
]


def test_criterion_12_reproducibility():
    differing = []
    with tempfile.TemporaryDirectory() as tmp:
        env = dict(os.environ, BEURLING_CACHE_DIR=str(Path(tmp) / "cache"))
        for args in CLI_RUNS:
            outputs = []
            for attempt in range(2):
                out = Path(tmp) / f"{args[0]}-{attempt}.json"
                proc = subprocess.run(
                    [sys.executable, "-m", "beurling", *args, "--out", str(out)],
                    capture_output=True,
                    env=env,
                )
                outputs.append((proc.returncode, proc.stdout, out.read_bytes() if out.exists() else None))
            if outputs[0] != outputs[1] or outputs[0][2] is None:
                differing.append(args[0])
    record(12, not differing, f"{len(CLI_RUNS)} commands rerun, differing: {differing or 'none'}")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as tmp:
                        fn(Path(tmp))
                else:
                    fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
