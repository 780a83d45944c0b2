"""Command-line front end.

Each subcommand runs one experiment, prints a report to stdout and optionally
writes the structured JSON document to ``--out``.  Exit status: 0 on a pass
(or inconclusive) verdict, 1 on fail, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import lie_repr, multipliers, restriction, weights
from .cache import LRCache, default_cache_dir
from .report import ExperimentReport, atomic_write_text, render_csv, render_table


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _real(text: str) -> float:
    """Decimal or a/b rational, parsed to a binary float."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}")


def _weight(text: str) -> tuple[int, ...]:
    try:
        return lie_repr.parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _require(cond: bool, flag: str, message: str) -> None:
    if not cond:
        raise UsageError(flag, message)


def _weight_for(n: int, lam, flag: str):
    _require(len(lam) == n, flag, f"expected {n} parts, got {len(lam)}")
    return lam


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


# --- commands -----------------------------------------------------------------


def cmd_dim(args, cache) -> ExperimentReport:
    _require(args.n >= 2, "--n", "must be >= 2")
    lam = _weight_for(args.n, args.weight, "--lambda")
    dim = lie_repr.weyl_dimension(args.n, lam)
    result = {"lambda": list(lam), "dimension": dim, "length": lie_repr.length(lam)}
    ok = True
    if dim <= args.enum_limit:
        mult = lie_repr.ssyt_weight_multiplicities(args.n, lam)
        result["ssyt_count"] = sum(mult.values())
        result["distinct_torus_characters"] = len(mult)
        ok = result["ssyt_count"] == dim
        verdict = _verdict(ok)
    else:
        verdict = "inconclusive"
    params = {"n": args.n, "lambda": list(lam), "enum_limit": args.enum_limit}
    return ExperimentReport("dim", params, result, verdict)


def cmd_tensor(args, cache) -> ExperimentReport:
    _require(args.n >= 2, "--n", "must be >= 2")
    lam = _weight_for(args.n, args.lhs, "--lhs")
    mu = _weight_for(args.n, args.rhs, "--rhs")
    dec = cache.decompose(args.n, lam, mu)
    total, product = dec.dimension_check()
    rows = [
        {"nu": list(nu), "multiplicity": c, "dimension": lie_repr.weyl_dimension(args.n, nu)}
        for nu, c in dec.terms.items()
    ]
    result = {"text": str(dec), "sum_c_dim": total, "dim_product": product, "rows": rows}
    params = {"n": args.n, "lhs": list(lam), "rhs": list(mu)}
    return ExperimentReport("tensor", params, result, _verdict(total == product))


def cmd_restrict(args, cache) -> ExperimentReport:
    n = args.n
    _require(n >= 2, "--n", "must be >= 2")
    _require(args.bound >= 0, "--bound", "must be >= 0")
    alpha = 1.0 if args.alpha is None else args.alpha
    params = {"n": n, "family": args.family, "alpha": alpha, "bound": args.bound}
    if args.P is not None:
        _require(len(args.P) == n - 1, "--P", f"expected {n - 1} entries")
        fam = _family(args.family, alpha)
        rv = restriction.restricted_weight(n, fam, args.P)
        wl = restriction.witness_lambda(n, args.P)
        result = rv.to_record() | {
            "witness_lambda": list(wl),
            "witness_ln_weight": weights.evaluate_log_weight(fam, n, wl),
        }
        params["P"] = list(args.P)
        ok = lie_repr.contains_character(n, rv.minimizer, rv.P) and rv.value <= result["witness_ln_weight"] + 1e-12
        return ExperimentReport("restrict", params, result, _verdict(ok), {"minimizer": list(rv.minimizer)})
    if args.family == "dimension":
        rep = restriction.check_dim_restriction_bounds(n, alpha, args.bound)
    elif args.family == "polynomial":
        rep = restriction.check_poly_restriction_bounds(n, alpha, args.bound)
    else:
        _require(alpha == 1.0, "--alpha", "the exponential restriction check is for exponent 1")
        rep = restriction.check_exp_restriction(n, args.bound)
        return ExperimentReport("restrict", params, rep.to_record(), _verdict(rep.passed))
    wit = {"worst_lower_P": rep.to_record()["worst_lower_P"], "worst_upper_P": rep.to_record()["worst_upper_P"]}
    return ExperimentReport("restrict", params, rep.to_record(), _verdict(rep.passed), wit)


# analytic bounds on the Condition-1 constant known for small n
CONDITION1_BOUNDS = {2: 1.0, 3: 3.0}


def cmd_condition1(args, cache) -> ExperimentReport:
    _require(args.n >= 2, "--n", "must be >= 2")
    _require(args.bound >= 0, "--bound", "must be >= 0")
    res = weights.condition1_scan(args.n, args.bound, cache.decompose)
    result = res.to_record()
    limit = CONDITION1_BOUNDS.get(args.n)
    result["analytic_bound"] = limit
    verdict = "inconclusive" if limit is None else _verdict(res.exact <= limit)
    params = {"n": args.n, "bound": args.bound}
    return ExperimentReport("condition1", params, result, verdict, {"maximizer": result["witness"]})


def _family(kind: str, alpha: float) -> weights.WeightFamily:
    try:
        return weights.WeightFamily(kind, alpha)
    except ValueError as exc:
        raise UsageError("--alpha", str(exc))


def cmd_submult(args, cache) -> ExperimentReport:
    _require(args.n >= 2, "--n", "must be >= 2")
    _require(args.bound >= 0, "--bound", "must be >= 0")
    alpha = 1.0 if args.alpha is None else args.alpha
    fam = _family(args.family, alpha)
    rep = weights.submultiplicativity_scan(fam, args.n, args.bound, cache.decompose)
    params = {"n": args.n, "family": args.family, "alpha": alpha, "bound": args.bound}
    return ExperimentReport(
        "submult", params, rep.to_record(), _verdict(rep.passed), {"worst": rep.to_record()["witness"]}
    )


def cmd_appendix_b(args, cache) -> ExperimentReport:
    alpha = 0.5 if args.alpha is None else args.alpha
    beta = 24.0 if args.beta is None else args.beta
    _require(0 < alpha < 1, "--alpha", "must lie in (0, 1)")
    _require(beta >= weights.beta_threshold(alpha), "--beta", f"must be >= {weights.beta_threshold(alpha)!r}")
    consts = weights.appendix_b_constants(alpha, beta)
    mono = weights.pq_monotonicity_check(alpha, beta, args.grid)
    result = {"constants": consts.to_record(), "monotonicity": mono.to_record()}
    ok = mono.passed and consts.ln_M >= 0
    params = {"alpha": alpha, "beta": beta, "grid": args.grid}
    witnesses = {}
    if args.n is not None:
        _require(args.n >= 2, "--n", "must be >= 2")
        dom = weights.exp_domination_check(args.n, alpha, beta, args.bound, consts, cache.decompose)
        result["domination"] = dom.to_record()
        witnesses["worst_margin"] = dom.to_record()["witness"]
        params |= {"n": args.n, "bound": args.bound}
        ok = ok and dom.passed
    return ExperimentReport("appendix-b", params, result, _verdict(ok), witnesses)


def _reference_sum(n: int, alpha: float) -> float | None:
    # only n = 1 has a closed form: 1 + 2 (zeta(2 alpha) - 1)
    if n != 1 or 2 * alpha <= 1:
        return None
    from scipy.special import zeta

    return 1.0 + 2.0 * (float(zeta(2 * alpha)) - 1.0)


def cmd_epstein(args, cache) -> ExperimentReport:
    _require(args.n >= 1, "--n", "must be >= 1")
    _require(args.radius >= 0, "--radius", "must be >= 0")
    _require(args.alpha is not None, "--alpha", "required")
    res = multipliers.epstein_partial(args.n, args.alpha, args.radius)
    result = res.to_record()
    result["analytic_converges"] = 2 * args.alpha > args.n
    ok = res.converged == result["analytic_converges"]
    ref = _reference_sum(args.n, args.alpha)
    if ref is not None:
        result["reference_sum"] = ref
        result["abs_error"] = abs(ref - res.partial_sum)
        ok = ok and result["abs_error"] <= res.tail_bound * (1 + 1e-9) + 1e-12
    params = {"n": args.n, "alpha": args.alpha, "radius": args.radius}
    return ExperimentReport("epstein", params, result, _verdict(ok))


def cmd_rudin_shapiro(args, cache) -> ExperimentReport:
    _require(0 <= args.k <= multipliers.RS_MAX_K, "--k", f"must be in [0, {multipliers.RS_MAX_K}]")
    _require(args.samples >= 1, "--samples", "must be >= 1")
    rows = []
    ok = True
    for k in range(args.k + 1):
        rep = multipliers.supnorm_check(multipliers.rudin_shapiro(k), args.samples)
        row = rep.to_record() | {"passed": rep.passed}
        if k <= args.hankel_max_k:
            h = multipliers.hankel_sign_matrix(k)
            norm = multipliers.operator_norm(h.entries)
            row |= {"hankel_norm": norm, "hankel_bound": h.norm_bound}
            row["passed"] = row["passed"] and norm <= h.norm_bound * (1 + 1e-12)
        ok = ok and row["passed"]
        rows.append(row)
    params = {"k": args.k, "samples": args.samples, "hankel_max_k": args.hankel_max_k}
    return ExperimentReport("rudin-shapiro", params, {"rows": rows}, _verdict(ok))


def cmd_torus_norms(args, cache) -> ExperimentReport:
    _require(args.n >= 1, "--n", "must be >= 1")
    _require(args.alpha is not None and args.alpha > 0, "--alpha", "must be > 0")
    d_list = args.d_list or [2, 4, 8, 16]
    for d in d_list:
        _require(d >= 1 and d & (d - 1) == 0, "--d-list", f"{d} is not a power of two")
        _require(d**args.n <= args.size_cap, "--d-list", f"d^n = {d**args.n} exceeds --size-cap {args.size_cap}")
    cert = multipliers.divergence_certificate(args.n, args.alpha, d_list, args.size_cap)
    result = cert.to_record()
    norms = [r.littlewood_norm for r in cert.rows]
    result["littlewood_successive_differences"] = [b - a for a, b in zip(norms, norms[1:])]
    result["summable"] = args.alpha > args.n / 2
    if args.matrix_csv:
        t = multipliers.build_t_matrix(args.n, args.alpha, d_list[-1], args.size_cap)
        atomic_write_text(Path(args.matrix_csv), t.to_csv())
    params = {"n": args.n, "alpha": args.alpha, "d_list": d_list, "size_cap": args.size_cap}
    ok = cert.op_norm_bound_holds and cert.quotient_bound_holds
    return ExperimentReport("torus-norms", params, result, _verdict(ok))


def cmd_group_tail(args, cache) -> ExperimentReport:
    _require(args.n >= 2, "--n", "must be >= 2")
    _require(args.bound >= 4, "--bound", "must be >= 4")
    _require(args.alpha is not None and args.alpha >= 0, "--alpha", "must be >= 0")
    res = multipliers.group_littlewood_tail(args.n, args.alpha, args.bound)
    result = res.to_record()
    params = {"n": args.n, "alpha": args.alpha, "bound": args.bound}
    return ExperimentReport("group-tail", params, result, _verdict(res.converges_estimated == res.converges_predicted))


COMMANDS = {
    "dim": cmd_dim,
    "tensor": cmd_tensor,
    "restrict": cmd_restrict,
    "condition1": cmd_condition1,
    "submult": cmd_submult,
    "appendix-b": cmd_appendix_b,
    "epstein": cmd_epstein,
    "rudin-shapiro": cmd_rudin_shapiro,
    "torus-norms": cmd_torus_norms,
    "group-tail": cmd_group_tail,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the structured JSON report to this path")
    common.add_argument("--format", choices=("json", "csv", "table"), default="table", help="stdout format")
    common.add_argument("--cache-dir", help="LR cache directory (default: $BEURLING_CACHE_DIR, then user data dir)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the LR cache")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the report")

    parser = argparse.ArgumentParser(prog="beurling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="Weyl dimension and SSYT count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="weight", type=_weight, required=True, help="e.g. 3,1,0")
    p.add_argument("--enum-limit", type=int, default=10**6, help="largest dimension to enumerate")

    p = sub.add_parser("tensor", parents=[common], help="Littlewood-Richardson decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lhs", type=_weight, required=True)
    p.add_argument("--rhs", type=_weight, required=True)

    p = sub.add_parser("restrict", parents=[common], help="restriction to the maximal torus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=weights.FAMILIES, default="dimension")
    p.add_argument("--alpha", type=_real)
    p.add_argument("--bound", type=int, default=6, help="max l1 norm of P (or |p| for exponential)")
    p.add_argument("--P", type=_int_list, help="evaluate a single torus character instead of scanning")

    p = sub.add_parser("condition1", parents=[common], help="dimension-ratio constant scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("submult", parents=[common], help="weight axiom scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=weights.FAMILIES, default="dimension")
    p.add_argument("--alpha", type=_real)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("appendix-b", parents=[common], help="exponential/polynomial domination constants")
    p.add_argument("--alpha", type=_real)
    p.add_argument("--beta", type=_real)
    p.add_argument("--grid", type=int, default=1000)
    p.add_argument("--n", type=int, help="also scan SU(n) decompositions")
    p.add_argument("--bound", type=int, default=8)

    p = sub.add_parser("epstein", parents=[common], help="lattice sum of (1 + |i|_1)^(-2 alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--radius", type=int, default=1000)

    p = sub.add_parser("rudin-shapiro", parents=[common], help="Rudin-Shapiro and Hankel sign matrices")
    p.add_argument("--k", type=int, default=12)
    p.add_argument("--samples", type=int, default=4096)
    p.add_argument("--hankel-max-k", type=int, default=10)

    p = sub.add_parser("torus-norms", parents=[common], help="operator/Schur norm certificates on Z^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--d-list", type=_int_list)
    p.add_argument("--size-cap", type=int, default=multipliers.DEFAULT_SIZE_CAP)
    p.add_argument("--matrix-csv", help="dump T for the largest d as CSV")

    p = sub.add_parser("group-tail", parents=[common], help="Littlewood tail sums over the dual of SU(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--bound", type=int, default=100, help="largest lambda_1")
    return parser


class _NoCache:
    def decompose(self, n, lam, mu):
        return lie_repr.tensor_decompose(n, lam, mu)

    def save(self):
        pass


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = _NoCache() if args.no_cache else LRCache(default_cache_dir(args.cache_dir))
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args, cache)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, lie_repr.EnumerationBudgetError, multipliers.SizeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cache.save()
    if args.timing:
        report.wall_clock_seconds = time.perf_counter() - start
    if args.out:
        report.write(args.out)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(render_csv(report))
    else:
        sys.stdout.write(render_table(report))
    return 1 if report.verdict == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
