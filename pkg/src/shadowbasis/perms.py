"""Permutations, colored permutations, rook placements and r-partitions.

A colored permutation ``w = (sigma, kappa)`` of ``[n]`` with ``r`` colors acts
on colored letters by ``w(i^j) = sigma(i)^(kappa(sigma(i)) + j)`` (colors mod
``r``).  Note that ``kappa`` is indexed by *values*: the color printed at
position ``i`` of the one-line notation is ``kappa(sigma(i))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError, ParseError, SizeLimitError
from .partitions import Partition, is_partition, partitions

DEFAULT_ENUMERATION_CAP = 10**9

Point = tuple[int, int]


def group_order(n: int, r: int) -> int:
    return r**n * factorial(n)


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(self.one_line)}: {self.one_line}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def points(self) -> frozenset[Point]:
        return frozenset(enumerate(self.one_line, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class ColoredPermutation:
    """An element ``(sigma, kappa)`` of the colored permutation group.

    ``kappa[j - 1]`` is the color attached to the value ``j``.
    """

    sigma: Permutation
    kappa: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputError("r must be positive")
        if len(self.kappa) != self.sigma.n:
            raise InvalidInputError("kappa must assign a color to every value")
        if any(not 0 <= c < self.r for c in self.kappa):
            raise InvalidInputError(f"colors must lie in 0..{self.r - 1}")

    @classmethod
    def from_one_line(cls, values: Sequence[int], colors: Sequence[int], r: int) -> ColoredPermutation:
        """Build from one-line values and the colors printed at each position."""
        kappa = [0] * len(values)
        for v, c in zip(values, colors):
            kappa[v - 1] = c
        return cls(Permutation(tuple(values)), tuple(kappa), r)

    @classmethod
    def identity(cls, n: int, r: int) -> ColoredPermutation:
        return cls(Permutation(tuple(range(1, n + 1))), (0,) * n, r)

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def colors(self) -> tuple[int, ...]:
        """Colors in one-line order, ``kappa(sigma(i))`` for ``i = 1..n``."""
        return tuple(self.kappa[v - 1] for v in self.sigma.one_line)

    def __call__(self, letter: tuple[int, int]) -> tuple[int, int]:
        i, j = letter
        v = self.sigma(i)
        return v, (self.kappa[v - 1] + j) % self.r

    def __mul__(self, other: ColoredPermutation) -> ColoredPermutation:
        """Left-to-right product: ``(u * v)(x) = v(u(x))``.

        With this convention ``group_matrix(u * v) == group_matrix(u) @ group_matrix(v)``.
        """
        if other.n != self.n or other.r != self.r:
            raise InvalidInputError("factors must lie in the same group")
        values = []
        colors = []
        for i in range(1, self.n + 1):
            v, c = other(self((i, 0)))
            values.append(v)
            colors.append(c)
        return ColoredPermutation.from_one_line(values, colors, self.r)

    def inverse(self) -> ColoredPermutation:
        values = [0] * self.n
        colors = [0] * self.n
        for i in range(1, self.n + 1):
            v, c = self((i, 0))
            values[v - 1] = i
            colors[v - 1] = (-c) % self.r
        return ColoredPermutation.from_one_line(values, colors, self.r)

    def cycles(self) -> list[tuple[tuple[int, ...], int]]:
        """Cycles of ``sigma`` paired with their colors (sum of kappa mod r)."""
        return [(cyc, sum(self.kappa[v - 1] for v in cyc) % self.r) for cyc in self.sigma.cycles()]

    def __str__(self) -> str:
        return format_one_line(self)


def parse_one_line(text: str, r: int | None = None) -> ColoredPermutation:
    """Parse ``"4^2,2^1,5^0,3^2,1^2"``; the ``^c`` suffix may be omitted when r = 1.

    When ``r`` is None it is inferred as one more than the largest color seen.
    """
    values: list[int] = []
    colors: list[int] = []
    col = 1
    for token in text.split(","):
        stripped = token.strip()
        offset = col + (len(token) - len(token.lstrip()))
        if not stripped:
            raise ParseError("empty entry", offset)
        base, sep, color = stripped.partition("^")
        if not base.isdigit():
            raise ParseError(f"expected a positive integer, got {base!r}", offset)
        if sep and not color.isdigit():
            raise ParseError(f"expected a color after '^', got {color!r}", offset + len(base) + 1)
        values.append(int(base))
        colors.append(int(color) if sep else 0)
        col += len(token) + 1
    if r is None:
        r = max(colors, default=0) + 1
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(f"values must be a permutation of 1..{len(values)}", 1)
    for pos, c in enumerate(colors):
        if c >= r:
            raise ParseError(f"color {c} out of range for r={r}", pos + 1)
    return ColoredPermutation.from_one_line(values, colors, r)


def format_one_line(w: ColoredPermutation) -> str:
    if w.r == 1:
        return ",".join(str(v) for v in w.sigma.one_line)
    return ",".join(f"{v}^{c}" for v, c in zip(w.sigma.one_line, w.colors))


def check_cap(n: int, r: int, cap: int) -> int:
    size = group_order(n, r)
    if size > cap:
        raise SizeLimitError(f"r^n*n! = {size} exceeds enumeration cap {cap} (n={n}, r={r})", size, cap)
    return size


def enumerate_group(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[ColoredPermutation]:
    """Yield every element of the group once: sigma in lex order, then kappa as a base-r number."""
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    check_cap(n, r, cap)
    for one_line in _permutations(range(1, n + 1)):
        sigma = Permutation(one_line)
        for kappa in product(range(r), repeat=n):
            yield ColoredPermutation(sigma, kappa, r)


def is_rook_placement(points: Iterable[Point]) -> bool:
    pts = list(points)
    return len({p[0] for p in pts}) == len(pts) == len({p[1] for p in pts})


def diagram(w: ColoredPermutation) -> tuple[frozenset[Point], ...]:
    """Layers ``C_0, ..., C_{r-1}``: point ``(i, sigma(i))`` goes to layer ``kappa(sigma(i))``."""
    layers: list[set[Point]] = [set() for _ in range(w.r)]
    for i, v in enumerate(w.sigma.one_line, 1):
        layers[w.kappa[v - 1]].add((i, v))
    return tuple(frozenset(layer) for layer in layers)


@dataclass(frozen=True, order=True)
class RPartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        if not self.components:
            raise InvalidInputError("an r-partition needs at least one component")
        for comp in self.components:
            if not is_partition(comp):
                raise InvalidInputError(f"component {comp} is not a partition")

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    def __getitem__(self, i: int) -> Partition:
        return self.components[i]

    def __str__(self) -> str:
        return "(" + ", ".join("(" + ",".join(map(str, c)) + ")" for c in self.components) + ")"


def cycle_type(w: ColoredPermutation) -> RPartition:
    comps: list[list[int]] = [[] for _ in range(w.r)]
    for cyc, color in w.cycles():
        comps[color].append(len(cyc))
    return RPartition(tuple(tuple(sorted(c, reverse=True)) for c in comps))


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def enumerate_rpartitions(n: int, r: int) -> list[RPartition]:
    """All r-partitions of ``n``: component sizes in reverse-lex order, then each component reverse-lex."""
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    out = []
    for sizes in _compositions(n, r):
        for comps in product(*(list(partitions(s)) for s in sizes)):
            out.append(RPartition(tuple(comps)))
    return out


def dual_rpartition(lam: RPartition) -> RPartition:
    """Fix the 0-th component and swap component ``i`` with ``r - i``."""
    c = lam.components
    return RPartition((c[0],) + tuple(reversed(c[1:])))
