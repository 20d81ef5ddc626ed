"""Longest-increasing-subsequence statistics and Hilbert series.

Three count families share one statistic.  For a colored permutation ``w``
with layers ``C_0..C_{r-1}``::

    stat(w) = r * lis(C_0) + sum_{i >= 1} (r - i) * |C_i|

``c[n, r, k]`` counts elements with ``stat == k``; ``a`` is the ``r = 1`` case
and ``b`` the ``r = 2`` case.  The Hilbert series of the quotient ring has
``coeffs[d] = c[n, r, r*n - d]``.
"""
from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Sequence

from . import _accel
from .errors import InvalidInputError, SizeLimitError
from .partitions import num_syt, partitions
from .perms import DEFAULT_ENUMERATION_CAP, check_cap, diagram, enumerate_group, group_order

DEFAULT_FAST_MAX_N = 64

KIND_R = {"a": 1, "b": 2}


@dataclass(frozen=True)
class StatTable:
    """Counts indexed by the statistic ``k`` (``counts[k]``, k = 0..r*n)."""

    kind: str
    n: int
    r: int
    counts: tuple[int, ...]
    path: str = "enumerate"

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def values(self) -> dict[tuple[int, ...], int]:
        if self.kind == "c":
            return {(self.n, self.r, k): v for k, v in enumerate(self.counts) if v}
        return {(self.n, k): v for k, v in enumerate(self.counts) if v}

    def total(self) -> int:
        return sum(self.counts)

    def same_counts(self, other: StatTable) -> bool:
        return _trim_right(self.counts) == _trim_right(other.counts)

    def to_json(self, cap: int | None = None) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "n": self.n,
            "r": self.r,
            "path": self.path,
            "cap": cap,
            "counts": {str(k): str(v) for k, v in enumerate(self.counts) if v},
        }


@dataclass(frozen=True)
class GradedSeries:
    coeffs: tuple[int, ...]
    n: int
    r: int
    path: str = field(default="enumerate", compare=False)

    def total(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                power = "q" if d == 1 else f"q^{d}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) or "0"


def _trim_right(seq: Sequence[int]) -> tuple[int, ...]:
    end = len(seq)
    while end and seq[end - 1] == 0:
        end -= 1
    return tuple(seq[:end])


def lis_points(points: Iterable[tuple[int, int]]) -> int:
    """Longest chain with both coordinates strictly increasing."""
    ordered = sorted(points)
    return _accel.lis([y for _, y in ordered])


def colored_statistic(w) -> int:
    layers = diagram(w)
    return w.r * lis_points(layers[0]) + sum((w.r - i) * len(layers[i]) for i in range(1, w.r))


# -- enumeration path ---------------------------------------------------------


def _histogram(n: int, r: int, threads: int = 1) -> list[int]:
    if threads == 1 or n < 2:
        return _accel.stat_histogram(n, r)
    # workers own disjoint sigma-lex ranges: all permutations with a given sigma(1)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_accel.stat_histogram, [n] * n, [r] * n, range(1, n + 1)))
    return [sum(col) for col in zip(*parts)]


def count_c(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1) -> StatTable:
    """Exact counts by visiting every group element."""
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    check_cap(n, r, cap)
    kind = "a" if r == 1 else "b" if r == 2 else "c"
    return StatTable(kind, n, r, tuple(_histogram(n, r, _resolve_threads(threads))), "enumerate")


def count_a(n: int, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1) -> StatTable:
    return count_c(n, 1, cap, threads)


def count_b(n: int, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1) -> StatTable:
    return count_c(n, 2, cap, threads)


def count_by_objects(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> StatTable:
    """Slow reference: the statistic evaluated on ``ColoredPermutation`` objects."""
    counts = [0] * (r * n + 1)
    for w in enumerate_group(n, r, cap):
        counts[colored_statistic(w)] += 1
    return StatTable("c", n, r, tuple(counts), "objects")


def _resolve_threads(threads: int) -> int:
    if threads == 0:
        import os

        return os.cpu_count() or 1
    return max(1, threads)


# -- closed-form path ---------------------------------------------------------


@lru_cache(maxsize=None)
def lis_distribution(j: int) -> tuple[int, ...]:
    """``a[j, l]`` for l = 0..j, as the sum of ``(f^lam)^2`` over partitions with first part l."""
    dist = [0] * (j + 1)
    for lam in partitions(j):
        dist[lam[0] if lam else 0] += num_syt(lam) ** 2
    return tuple(dist)


def _weighted_compositions(m_total: int, r: int):
    """Yield (weights m_1..m_{r-1}) with sum ``m_total``."""
    parts = r - 1

    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    if parts == 0:
        if m_total == 0:
            yield ()
        return
    yield from rec(m_total, parts)


def count_fast(kind: str, n: int, r: int | None = None, max_n: int = DEFAULT_FAST_MAX_N) -> StatTable:
    """Counts from partition data instead of enumeration.

    Choose which ``M`` rows and columns carry nonzero colors (``C(n, M)^2``
    ways), a bijection between them (``M!``), and which colors each carries
    (a multinomial).  The color-0 layer is then a permutation of the remaining
    ``n - M`` letters, whose lis distribution comes from RSK and the hook
    length formula.
    """
    if kind in KIND_R:
        r = KIND_R[kind]
    elif kind != "c" or r is None:
        raise InvalidInputError("kind must be 'a', 'b' or 'c' (with r)")
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds closed-form bound {max_n}", n, max_n)
    counts = [0] * (r * n + 1)
    for M in range(0, n + 1 if r > 1 else 1):
        place = comb(n, M) ** 2 * factorial(M)
        a_rest = lis_distribution(n - M)
        for ms in _weighted_compositions(M, r):
            multi = factorial(M)
            for m in ms:
                multi //= factorial(m)
            colored = sum((r - i) * m for i, m in enumerate(ms, 1))
            weight = place * multi
            for ell, a in enumerate(a_rest):
                if a:
                    counts[r * ell + colored] += weight * a
    return StatTable(kind, n, r, tuple(counts), "fast")


# -- Hilbert series -------------------------------------------------------------


def stat_table(n: int, r: int, path: str = "fast", cap: int = DEFAULT_ENUMERATION_CAP,
               max_n: int = DEFAULT_FAST_MAX_N, threads: int = 1) -> StatTable:
    if path == "enumerate":
        return count_c(n, r, cap, threads)
    if path == "fast":
        return count_fast("c", n, r, max_n)
    raise InvalidInputError(f"unknown path {path!r}")


def series_from_table(table: StatTable) -> GradedSeries:
    top = table.r * table.n
    return GradedSeries(tuple(table[top - d] for d in range(top + 1)), table.n, table.r, table.path)


def hilbert_series(n: int, r: int, path: str = "fast", **kwargs) -> GradedSeries:
    """``coeffs[d] = c[n, r, r*n - d]``."""
    return series_from_table(stat_table(n, r, path, **kwargs))


def degree_histogram(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[int, ...]:
    """Histogram of shadow-monomial degrees over the whole group."""
    from .shadow import shadow_monomial

    counts = [0] * (r * n + 1)
    for w in enumerate_group(n, r, cap):
        counts[shadow_monomial(w).degree] += 1
    return tuple(counts)


# -- shape analysis -------------------------------------------------------------


def _support(seq: Sequence[int]) -> tuple[int, int]:
    nz = [i for i, v in enumerate(seq) if v]
    if not nz:
        return 0, -1
    return nz[0], nz[-1]


@dataclass(frozen=True)
class LogConcavityReport:
    violations: tuple[int, ...]

    @property
    def log_concave(self) -> bool:
        return not self.violations


def check_log_concave(seq: Sequence[int] | StatTable | GradedSeries) -> LogConcavityReport:
    """Indices ``i`` (centre of the triple) with ``seq[i-1] * seq[i+1] > seq[i]^2``.

    Only the support (leading/trailing zeros dropped) is examined.
    """
    values = _as_sequence(seq)
    lo, hi = _support(values)
    bad = tuple(i for i in range(lo + 1, hi) if values[i - 1] * values[i + 1] > values[i] ** 2)
    return LogConcavityReport(bad)


@dataclass(frozen=True)
class UnimodalityReport:
    unimodal: bool
    peak: int | None
    witness: tuple[int, int] | None = None


def check_unimodal(seq: Sequence[int] | StatTable | GradedSeries) -> UnimodalityReport:
    """Weakly rising then weakly falling on the support.

    On failure ``witness`` is ``(i, j)``: a descent at ``i`` followed by an ascent at ``j``.
    """
    values = _as_sequence(seq)
    lo, hi = _support(values)
    if hi < lo:
        return UnimodalityReport(True, None)
    descent = None
    for i in range(lo, hi):
        if values[i + 1] < values[i] and descent is None:
            descent = i
        elif values[i + 1] > values[i] and descent is not None:
            return UnimodalityReport(False, None, (descent, i))
    top = max(values[lo:hi + 1])
    peak = next(k for k in range(lo, hi + 1) if values[k] == top)
    return UnimodalityReport(True, peak)


def _as_sequence(seq) -> Sequence[int]:
    if isinstance(seq, StatTable):
        return seq.counts
    if isinstance(seq, GradedSeries):
        return seq.coeffs
    return list(seq)


# -- export -----------------------------------------------------------------------


def histogram_csv(table: StatTable | None, out: str | Path) -> Path:
    """Write ``k,count`` rows over the support of the table."""
    path = Path(out)
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["k", "count"])
            if table is not None:
                lo, hi = _support(table.counts)
                for k in range(lo, hi + 1):
                    writer.writerow([k, str(table[k])])
    except OSError as exc:
        raise OSError(f"cannot write histogram to {path}: {exc}") from exc
    return path


def table_json(table: StatTable, out: str | Path, cap: int | None = None) -> Path:
    path = Path(out)
    try:
        path.write_text(json.dumps(table.to_json(cap), indent=2) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write table to {path}: {exc}") from exc
    return path


def expected_total(n: int, r: int) -> int:
    return group_order(n, r)
