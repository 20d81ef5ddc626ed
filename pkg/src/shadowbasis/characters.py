"""Characters of colored permutation groups.

Irreducibles and conjugacy classes are both labelled by r-partitions.
Characters are evaluated with the colored Murnaghan-Nakayama rule: strip a
ribbon of size ``beta`` from one component ``j`` for each cycle
``(beta, color)``, picking up ``(-1)**height * w**(j * color)``.
"""
from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import InvalidInputError, SizeLimitError
from .partitions import Partition, contains, num_syt
from .perms import (
    DEFAULT_ENUMERATION_CAP,
    RPartition,
    cycle_type,
    dual_rpartition,
    enumerate_group,
    enumerate_rpartitions,
    group_order,
)
from .stats import hilbert_series

Cycle = tuple[int, int]  # (length, color)

CHARACTER_TABLE_MAX = (5, 3)


@dataclass(frozen=True)
class SkewRShape:
    outer: RPartition
    inner: RPartition

    def __post_init__(self):
        if self.outer.r != self.inner.r:
            raise InvalidInputError("outer and inner need the same number of components")
        for o, i in zip(self.outer.components, self.inner.components):
            if not contains(o, i):
                raise InvalidInputError(f"{i} is not contained in {o}")

    @property
    def r(self) -> int:
        return self.outer.r

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n


@dataclass(frozen=True)
class RibbonStep:
    component: int
    removed: frozenset[tuple[int, int]]
    height: int
    cycle_length: int
    cycle_color: int


def remove_ribbons(lam: Partition, size: int, inner: Partition = ()) -> list[tuple[Partition, int]]:
    """All ``(lam minus ribbon, height)`` for removable ribbons of ``size`` cells.

    Uses beta-numbers: a ribbon of length ``size`` corresponds to moving a bead
    from position ``b`` to the empty position ``b - size``; the height is the
    number of beads jumped over.
    """
    length = len(lam)
    beads = [part + length - 1 - i for i, part in enumerate(lam)]
    occupied = set(beads)
    out = []
    for b in beads:
        target = b - size
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beads if target < x < b)
        moved = sorted((target if x == b else x for x in beads), reverse=True)
        new = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        new = tuple(p for p in new if p)
        if contains(new, inner):
            out.append((new, height))
    return out


def ribbon_cells(outer: Partition, inner: Partition) -> frozenset[tuple[int, int]]:
    return frozenset(
        (i, j) for i, part in enumerate(outer) for j in range(inner[i] if i < len(inner) else 0, part)
    )


def ribbon_steps(shape: SkewRShape, cycle: Cycle) -> list[tuple[RPartition, RibbonStep]]:
    """Every way to strip one r-ribbon for ``cycle`` from the outer shape."""
    beta, color = cycle
    out = []
    for j, (o, i) in enumerate(zip(shape.outer.components, shape.inner.components)):
        for new, height in remove_ribbons(o, beta, i):
            comps = shape.outer.components[:j] + (new,) + shape.outer.components[j + 1:]
            step = RibbonStep(j, ribbon_cells(o, new), height, beta, color)
            out.append((RPartition(comps), step))
    return out


@lru_cache(maxsize=None)
def _mn(outer: tuple[Partition, ...], inner: tuple[Partition, ...], cycles: tuple[Cycle, ...]) -> tuple[int, ...]:
    r = len(outer)
    if not cycles:
        vec = [0] * r
        if outer == inner:
            vec[0] = 1
        return tuple(vec)
    (beta, color), rest = cycles[0], cycles[1:]
    acc = [0] * r
    for j in range(r):
        for new, height in remove_ribbons(outer[j], beta, inner[j]):
            sub = _mn(outer[:j] + (new,) + outer[j + 1:], inner, rest)
            if not any(sub):
                continue
            sign = -1 if height % 2 else 1
            shift = (j * color) % r
            for k, v in enumerate(sub):
                if v:
                    acc[(k + shift) % r] += sign * v
    return tuple(acc)


def mn_character(shape: SkewRShape | RPartition, cycles: Sequence[Cycle], canonical: bool = True) -> CyclotomicNumber:
    """Character of ``shape`` on any element with the given ``(length, color)`` cycles.

    With ``canonical`` the cycles are sorted first (longest first) so the memo
    is shared; the value does not depend on the order.
    """
    if isinstance(shape, RPartition):
        shape = SkewRShape(shape, RPartition(((),) * shape.r))
    cycles = [(int(b), int(c) % shape.r) for b, c in cycles]
    if sum(b for b, _ in cycles) != shape.size:
        raise InvalidInputError(f"cycle lengths sum to {sum(b for b, _ in cycles)}, shape has size {shape.size}")
    if canonical:
        cycles.sort(reverse=True)
    vec = _mn(shape.outer.components, shape.inner.components, tuple(cycles))
    return CyclotomicNumber.from_poly(vec, shape.r)


def class_cycles(label: RPartition) -> list[Cycle]:
    """Cycle data ``(length, color)`` of any element in the class labelled ``label``."""
    return [(part, color) for color, comp in enumerate(label.components) for part in comp]


def multinomial(n: int, parts: Iterable[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def dim_irreducible(lam: RPartition) -> int:
    """Number of standard tableaux of the r-shape: which entries go to which
    component, times the SYT count of each component."""
    sizes = [sum(c) for c in lam.components]
    out = multinomial(lam.n, sizes)
    for comp in lam.components:
        out *= num_syt(comp)
    return out


@lru_cache(maxsize=None)
def count_syt_rshape(comps: tuple[Partition, ...]) -> int:
    """Standard tableaux of an r-shape, by removing the cell holding the largest entry."""
    if not any(comps):
        return 1
    total = 0
    for j, lam in enumerate(comps):
        for i, part in enumerate(lam):
            below = lam[i + 1] if i + 1 < len(lam) else 0
            if part > below:
                new = tuple(p for p in lam[:i] + (part - 1,) + lam[i + 1:] if p)
                total += count_syt_rshape(comps[:j] + (new,) + comps[j + 1:])
    return total


def verify_branching(lam: RPartition, k: int, g: Sequence[Cycle], h: Sequence[Cycle]) -> bool:
    """Check restriction to the product of the size-``k`` and size-``n-k`` subgroups.

    ``chi^lam(g x h) == sum_mu chi^mu(g) * chi^(lam/mu)(h)`` over ``mu`` of size ``k``
    contained in ``lam``.
    """
    n, r = lam.n, lam.r
    if not 0 < k < n:
        raise InvalidInputError("need 0 < k < n")
    if sum(b for b, _ in g) != k or sum(b for b, _ in h) != n - k:
        raise InvalidInputError("cycle data sizes do not match k and n - k")
    left = mn_character(lam, list(g) + list(h))
    right = CyclotomicNumber.zero(r)
    for mu in enumerate_rpartitions(k, r):
        if all(contains(o, i) for o, i in zip(lam.components, mu.components)):
            right = right + mn_character(mu, g) * mn_character(SkewRShape(lam, mu), h)
    return left == right


def degree_statistic(lam: RPartition) -> int:
    """``r * lam0_1 + sum_i i * |lam^i|`` (first part of an empty partition is 0)."""
    first = lam.components[0][0] if lam.components[0] else 0
    return lam.r * first + sum(i * sum(c) for i, c in enumerate(lam.components) if i)


def strata(n: int, r: int, k: int) -> list[RPartition]:
    """Labels whose ``V^lam (x) V^dual(lam)`` sits in degree ``k``."""
    return [lam for lam in enumerate_rpartitions(n, r) if degree_statistic(lam) == r * n - k]


def strata_cumulative(n: int, r: int, k: int) -> list[RPartition]:
    """Labels contributing to degrees ``<= k`` (the ``>=`` form of the condition)."""
    return [lam for lam in enumerate_rpartitions(n, r) if degree_statistic(lam) >= r * n - k]


@dataclass(frozen=True)
class StrataRow:
    k: int
    num_lambdas: int
    sum_dim_sq: int
    hilbert_coeff: int

    @property
    def match(self) -> bool:
        return self.sum_dim_sq == self.hilbert_coeff


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    r: int
    rows: tuple[StrataRow, ...]
    cumulative_ok: bool
    dual_dims_ok: bool

    @property
    def ok(self) -> bool:
        return all(row.match for row in self.rows) and self.cumulative_ok and self.dual_dims_ok

    def to_csv(self, out: str | Path) -> Path:
        path = Path(out)
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["k", "num_lambdas", "sum_dim_sq", "hilbert_coeff", "match"])
            for row in self.rows:
                writer.writerow([row.k, row.num_lambdas, row.sum_dim_sq, row.hilbert_coeff, str(row.match).lower()])
        return path


def verify_graded_decomposition(n: int, r: int, path: str = "fast", **kwargs) -> DecompositionReport:
    """Compare ``sum dim(lam) * dim(dual(lam))`` over each stratum with the Hilbert series."""
    series = hilbert_series(n, r, path, **kwargs)
    labels = enumerate_rpartitions(n, r)
    dims = {lam: dim_irreducible(lam) for lam in labels}
    dual_ok = all(dims[dual_rpartition(lam)] == d for lam, d in dims.items())
    by_degree: dict[int, list[RPartition]] = {}
    for lam in labels:
        by_degree.setdefault(r * n - degree_statistic(lam), []).append(lam)
    rows = []
    for k in range(r * n + 1):
        members = by_degree.get(k, [])
        rows.append(StrataRow(k, len(members), sum(dims[lam] * dims[dual_rpartition(lam)] for lam in members),
                              series.coeffs[k]))
    running = 0
    cumulative_ok = True
    for k in range(r * n + 1):
        running += series.coeffs[k]
        if sum(dims[lam] ** 2 for lam in strata_cumulative(n, r, k)) != running:
            cumulative_ok = False
    return DecompositionReport(n, r, tuple(rows), cumulative_ok, dual_ok)


def centralizer_order(label: RPartition) -> int:
    out = 1
    for comp in label.components:
        for part, mult in Counter(comp).items():
            out *= (label.r * part) ** mult * factorial(mult)
    return out


def class_sizes(n: int, r: int) -> list[int]:
    order = group_order(n, r)
    return [order // centralizer_order(lam) for lam in enumerate_rpartitions(n, r)]


def class_sizes_by_enumeration(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    counts = Counter(cycle_type(w) for w in enumerate_group(n, r, cap))
    return [counts[lam] for lam in enumerate_rpartitions(n, r)]


@dataclass(frozen=True)
class CharacterTable:
    n: int
    r: int
    labels: tuple[RPartition, ...]
    class_sizes: tuple[int, ...]
    values: tuple[tuple[CyclotomicNumber, ...], ...]

    def inner_product(self, a: int, b: int) -> CyclotomicNumber:
        acc = CyclotomicNumber.zero(self.r)
        for size, x, y in zip(self.class_sizes, self.values[a], self.values[b]):
            acc = acc + (x * y.conjugate()) * size
        return acc

    def orthogonality_holds(self) -> bool:
        order = group_order(self.n, self.r)
        m = len(self.labels)
        return all(self.inner_product(a, b) == (order if a == b else 0) for a in range(m) for b in range(m))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "r": self.r,
            "modulus": self.r,
            "labels": [[list(c) for c in lam.components] for lam in self.labels],
            "classes": [[list(c) for c in lam.components] for lam in self.labels],
            "class_sizes": list(self.class_sizes),
            "values": [[x.to_text().split(",") for x in row] for row in self.values],
        }

    def write_json(self, out: str | Path) -> Path:
        path = Path(out)
        path.write_text(json.dumps(self.to_json(), indent=1) + "\n")
        return path


def character_table(n: int, r: int, bounds: tuple[int, int] = CHARACTER_TABLE_MAX) -> CharacterTable:
    """Rows are irreducibles, columns classes, both in ``enumerate_rpartitions`` order."""
    if n > bounds[0] or r > bounds[1]:
        raise SizeLimitError(f"character table for n={n}, r={r} exceeds bounds {bounds}", n, bounds[0])
    labels = enumerate_rpartitions(n, r)
    values = tuple(tuple(mn_character(lam, class_cycles(cls)) for cls in labels) for lam in labels)
    return CharacterTable(n, r, tuple(labels), tuple(class_sizes(n, r)), values)
