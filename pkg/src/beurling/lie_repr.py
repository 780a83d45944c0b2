"""Combinatorics of irreducible SU(n) representations.

Dominant weights are plain tuples of non-negative integers, nonincreasing,
with the last part equal to zero after normalization.  Torus characters are
tuples of n - 1 integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Weight = tuple[int, ...]

DEFAULT_BUDGET = 10**7


class EnumerationBudgetError(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: {needed} objects exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


def normalize(parts: Sequence[int]) -> Weight:
    """Subtract the last part from every part (the det = 1 reduction)."""
    parts = tuple(int(p) for p in parts)
    if len(parts) < 2:
        raise ValueError(f"dominant weight needs at least 2 parts, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be nonincreasing: {parts}")
    last = parts[-1]
    return tuple(p - last for p in parts)


def check_weight(n: int, lam: Sequence[int]) -> Weight:
    lam = normalize(lam)
    if len(lam) != n:
        raise ValueError(f"weight {lam} has {len(lam)} parts, expected n={n}")
    return lam


def parse_weight(text: str) -> Weight:
    return normalize(int(tok) for tok in text.replace(" ", "").strip("()").split(","))


def format_weight(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def superfactorial(n: int) -> int:
    """prod_{1<=i<j<=n} (j - i) = 1! 2! ... (n-1)!"""
    return math.prod(math.factorial(k) for k in range(1, n))


def weyl_dimension(n: int, lam: Sequence[int]) -> int:
    lam = check_weight(n, lam)
    num = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
    dim, rem = divmod(num, superfactorial(n))
    assert rem == 0
    return dim


def length(lam: Sequence[int]) -> int:
    """Word length tau_S(pi_lambda) = lambda_1 of a normalized weight."""
    return normalize(lam)[0]


def enumerate_dominant(n: int, max_first_part: int) -> Iterator[Weight]:
    """Yield normalized dominant weights with lambda_1 <= max_first_part in lex order."""
    if max_first_part < 0:
        raise ValueError("max_first_part must be >= 0")

    def rec(prefix: list[int], cap: int) -> Iterator[Weight]:
        if len(prefix) == n - 1:
            yield tuple(prefix) + (0,)
            return
        for p in range(cap + 1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    # the first part ranges over 0..max, the remaining parts are bounded by it
    for first in range(max_first_part + 1):
        yield from rec([first], first)


def count_dominant(n: int, max_first_part: int) -> int:
    return math.comb(max_first_part + n - 1, n - 1)


# --- weight multiplicities via Gelfand-Tsetlin chains -----------------------
#
# A semistandard tableau of shape lam with entries <= m is a chain of shapes
# lam^(0) = 0 c lam^(1) c ... c lam^(m) = lam where each step adds a
# horizontal strip; the strip lam^(k)/lam^(k-1) holds the entries equal to k.


def _interlacing(shape: Weight) -> Iterator[Weight]:
    """Shapes kappa with one fewer row such that shape/kappa is a horizontal strip."""
    rows = len(shape)

    def rec(i: int, acc: list[int]) -> Iterator[Weight]:
        if i == rows - 1:
            yield tuple(acc)
            return
        for k in range(shape[i + 1], shape[i] + 1):
            acc.append(k)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _contents(shape: Weight) -> tuple[tuple[Weight, int], ...]:
    """All contents (t_1..t_m) of SSYT of ``shape`` (m = len(shape)), with counts."""
    if len(shape) == 1:
        return (((shape[0],), 1),)
    size = sum(shape)
    acc: Counter[Weight] = Counter()
    for kappa in _interlacing(shape):
        top = size - sum(kappa)
        for content, mult in _contents(kappa):
            acc[content + (top,)] += mult
    return tuple(sorted(acc.items()))


def ssyt_contents(n: int, lam: Sequence[int], budget: int = DEFAULT_BUDGET) -> dict[Weight, int]:
    """Map from full content vector (t_1, ..., t_n) to the number of SSYT of shape lam."""
    lam = check_weight(n, lam)
    dim = weyl_dimension(n, lam)
    if dim > budget:
        raise EnumerationBudgetError(f"SSYT of shape {format_weight(lam)}", dim, budget)
    return dict(_contents(lam))


def ssyt_weight_multiplicities(
    n: int, lam: Sequence[int], budget: int = DEFAULT_BUDGET
) -> dict[Weight, int]:
    """Multiplicity of each torus character chi_P in pi_lam restricted to H_n.

    P = (t_1 - t_n, ..., t_{n-1} - t_n); keys are in lexicographic order.
    """
    acc: Counter[Weight] = Counter()
    for t, mult in ssyt_contents(n, lam, budget).items():
        acc[tuple(ti - t[-1] for ti in t[:-1])] += mult
    return dict(sorted(acc.items()))


@lru_cache(maxsize=None)
def _has_content(shape: Weight, target: Weight) -> bool:
    # target[k] is the number of boxes labelled k+1; the largest label sits in
    # a horizontal strip on the outer rim, so peel it off and recurse.
    if len(shape) == 1:
        return shape[0] == target[0]
    size = sum(shape)
    for kappa in _interlacing(shape):
        if size - sum(kappa) == target[-1] and _has_content(kappa, target[:-1]):
            return True
    return False


def contains_character(n: int, lam: Sequence[int], P: Sequence[int]) -> bool:
    """Whether chi_P occurs in pi_lam restricted to the maximal torus.

    Searches for a single witness tableau; no full enumeration.
    """
    lam = check_weight(n, lam)
    P = tuple(int(p) for p in P)
    if len(P) != n - 1:
        raise ValueError(f"torus character needs {n - 1} entries, got {P}")
    # sum t_i = |lam| and t_i = p_i + t_n  =>  n t_n = |lam| - sum p_i
    t_n, rem = divmod(sum(lam) - sum(P), n)
    if rem or t_n < 0:
        return False
    target = tuple(p + t_n for p in P) + (t_n,)
    if min(target) < 0:
        return False
    return _has_content(lam, target)


def find_witness_tableau(n: int, lam: Sequence[int], P: Sequence[int]) -> list[list[int]] | None:
    """A semistandard tableau of shape lam whose content realizes P, or None."""
    lam = check_weight(n, lam)
    if not contains_character(n, lam, P):
        return None
    t_n = (sum(lam) - sum(P)) // n
    target = tuple(p + t_n for p in P) + (t_n,)
    chain = [lam]
    shape = lam
    for label in range(n, 1, -1):
        size = sum(shape)
        for kappa in _interlacing(shape):
            if size - sum(kappa) == target[label - 1] and _has_content(kappa, target[: label - 1]):
                chain.append(kappa)
                shape = kappa
                break
    chain.reverse()  # chain[k] has k + 1 rows and holds labels 1..k+1
    rows: list[list[int]] = [[] for _ in lam]
    prev: tuple[int, ...] = ()
    for label, cur in enumerate(chain, start=1):
        for r, width in enumerate(cur):
            old = prev[r] if r < len(prev) else 0
            rows[r].extend([label] * (width - old))
        prev = cur
    return [row for row in rows if row]


# --- Littlewood-Richardson rule --------------------------------------------


@dataclass(frozen=True)
class TensorDecomposition:
    n: int
    lhs: Weight
    rhs: Weight
    terms: dict[Weight, int]

    def __str__(self) -> str:
        body = " + ".join(f"{c}·{format_weight(nu)}" for nu, c in self.terms.items())
        return f"{format_weight(self.lhs)} ⊗ {format_weight(self.rhs)} = {body}"

    def dimension_check(self) -> tuple[int, int]:
        """(sum_nu c * dim nu, dim lhs * dim rhs); equal for a correct decomposition."""
        total = sum(c * weyl_dimension(self.n, nu) for nu, c in self.terms.items())
        return total, weyl_dimension(self.n, self.lhs) * weyl_dimension(self.n, self.rhs)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "terms": [[list(nu), c] for nu, c in self.terms.items()],
            "text": str(self),
        }

    @classmethod
    def from_record(cls, rec: dict) -> TensorDecomposition:
        return cls(
            n=rec["n"],
            lhs=tuple(rec["lhs"]),
            rhs=tuple(rec["rhs"]),
            terms={tuple(nu): c for nu, c in rec["terms"]},
        )


def _lr_fillings(lam: Weight, mu: Weight, rows: int, budget: int) -> Counter[Weight]:
    """c^nu_{lam,mu} for partitions nu with at most ``rows`` rows.

    Boxes labelled k form a horizontal strip added to the shape carrying the
    labels < k.  The reverse reading word is a lattice word iff, for every row
    r and label k >= 2, the number of k's in rows <= r does not exceed the
    number of (k-1)'s in rows < r.
    """
    mu = tuple(m for m in mu if m > 0)
    out: Counter[Weight] = Counter()
    visited = 0
    shape0 = list(lam) + [0] * (rows - len(lam))
    # placed[k][r]: number of boxes labelled k+1 in row r
    placed: list[list[int]] = []

    def add_strip(k: int, shape: list[int]) -> None:
        nonlocal visited
        if k == len(mu):
            out[tuple(shape)] += 1
            return
        prev_counts = placed[k - 1] if k > 0 else None
        counts = [0] * rows
        new = list(shape)

        def row(r: int, remaining: int, cum: int, prev_cum: int) -> None:
            nonlocal visited
            visited += 1
            if visited > budget:
                raise EnumerationBudgetError("LR fillings", visited, budget)
            if remaining == 0:
                placed.append(list(counts))
                add_strip(k + 1, new)
                placed.pop()
                return
            if r == rows:
                return
            # horizontal strip: the new row may not overhang the old row above
            cap = shape[r - 1] - shape[r] if r > 0 else remaining
            if prev_counts is not None:
                cap = min(cap, prev_cum - cum)
            cap = min(cap, remaining)
            next_prev = prev_cum + (prev_counts[r] if prev_counts is not None else 0)
            for a in range(cap, -1, -1):
                counts[r] = a
                new[r] = shape[r] + a
                row(r + 1, remaining - a, cum + a, next_prev)
            counts[r] = 0
            new[r] = shape[r]

        row(0, mu[k], 0, 0)

    add_strip(0, shape0)
    return out


@lru_cache(maxsize=4096)
def _tensor_decompose(n: int, lam: Weight, mu: Weight, budget: int) -> TensorDecomposition:
    raw = _lr_fillings(lam, mu, n, budget)
    terms: Counter[Weight] = Counter()
    for nu, c in raw.items():
        terms[normalize(nu)] += c
    return TensorDecomposition(n, lam, mu, dict(sorted(terms.items())))


def tensor_decompose(
    n: int, lam: Sequence[int], mu: Sequence[int], budget: int = DEFAULT_BUDGET
) -> TensorDecomposition:
    """Decompose pi_lam (x) pi_mu into irreducibles by the Littlewood-Richardson rule."""
    return _tensor_decompose(n, check_weight(n, lam), check_weight(n, mu), budget)
