"""Monomials in the matrix variables ``x[i,j]``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Point = tuple[int, int]


@dataclass(frozen=True)
class Monomial:
    """A monomial stored as sorted ``((i, j), exponent)`` pairs with positive exponents."""

    factors: tuple[tuple[Point, int], ...] = ()

    @classmethod
    def from_exponents(cls, exponents: Mapping[Point, int]) -> Monomial:
        return cls(tuple(sorted((p, e) for p, e in exponents.items() if e)))

    @classmethod
    def from_points(cls, points: Iterable[Point], exponent: int = 1) -> Monomial:
        return cls(tuple(sorted((p, exponent) for p in points)))

    @property
    def exponents(self) -> dict[Point, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def support(self) -> frozenset[Point]:
        return frozenset(p for p, _ in self.factors)

    def __mul__(self, other: Monomial) -> Monomial:
        exps = self.exponents
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return Monomial.from_exponents(exps)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"x[{i},{j}]" + (f"^{e}" if e != 1 else "") for (i, j), e in self.factors)
