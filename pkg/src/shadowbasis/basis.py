"""Matrix model of the group, ideal generators, the Toeplitz order and basis certificates.

Group elements are viewed as monomial matrices with ``M[i][j] = w**kappa(j)``
when ``sigma(i) = j``.  Shadow monomials form a basis of functions on the
group exactly when the evaluation matrix ``E[w][m] = m(M(w))`` is invertible.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .cyclotomic import CyclotomicNumber, ExactMatrix
from .errors import InvalidInputError
from .monomial import Monomial
from .perms import ColoredPermutation, check_cap, enumerate_group
from .shadow import shadow_monomial

Point = tuple[int, int]

DEFAULT_BASIS_CAP = 200


def group_matrix(w: ColoredPermutation) -> ExactMatrix:
    n, r = w.n, w.r
    zero = CyclotomicNumber.zero(r)
    rows = [[zero] * n for _ in range(n)]
    for i, j in enumerate(w.sigma.one_line):
        rows[i][j - 1] = CyclotomicNumber.root(w.kappa[j - 1], r)
    return ExactMatrix(rows, r)


def evaluate_monomial(m: Monomial, M: ExactMatrix) -> CyclotomicNumber:
    out = CyclotomicNumber.one(M.r)
    for (i, j), e in m.factors:
        if not (1 <= i <= M.rows and 1 <= j <= M.cols):
            raise InvalidInputError(f"x[{i},{j}] lies outside a {M.rows}x{M.cols} matrix")
        entry = M[i - 1, j - 1]
        if not entry:
            return CyclotomicNumber.zero(M.r)
        for _ in range(e):
            out = out * entry
    return out


def _evaluate_on_element(m: Monomial, w: ColoredPermutation) -> CyclotomicNumber:
    """``m(group_matrix(w))`` without building the matrix: every nonzero entry is a root of unity."""
    power = 0
    for (i, j), e in m.factors:
        if w.sigma(i) != j:
            return CyclotomicNumber.zero(w.r)
        power += w.kappa[j - 1] * e
    return CyclotomicNumber.root(power, w.r)


def evaluation_matrix(elements: Sequence[ColoredPermutation], monomials: Sequence[Monomial]) -> ExactMatrix:
    r = elements[0].r if elements else 1
    return ExactMatrix([[_evaluate_on_element(m, w) for m in monomials] for w in elements], r)


@dataclass(frozen=True)
class BasisReport:
    n: int
    r: int
    invertible: bool
    matrix_size: int
    rank: int
    duplicates: tuple[tuple[str, str], ...] = ()

    @property
    def falsified(self) -> bool:
        return bool(self.duplicates) or not self.invertible

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "invertible": self.invertible,
            "matrix_size": self.matrix_size,
            "rank": self.rank,
            "duplicates": [list(d) for d in self.duplicates],
        }


def shadow_basis(n: int, r: int, cap: int = DEFAULT_BASIS_CAP) -> tuple[list[ColoredPermutation], list[Monomial]]:
    check_cap(n, r, cap)
    elements = list(enumerate_group(n, r, cap))
    return elements, [shadow_monomial(w) for w in elements]


def verify_basis(n: int, r: int, cap: int = DEFAULT_BASIS_CAP, export: str | Path | None = None) -> BasisReport:
    """Exact invertibility of the evaluation matrix of all shadow monomials.

    Two elements with the same shadow monomial would make the matrix
    singular; they are listed in ``duplicates`` as a falsification.
    """
    elements, monomials = shadow_basis(n, r, cap)
    seen: dict[Monomial, ColoredPermutation] = {}
    duplicates = []
    for w, m in zip(elements, monomials):
        if m in seen:
            duplicates.append((str(seen[m]), str(w)))
        else:
            seen[m] = w
    E = evaluation_matrix(elements, monomials)
    if export is not None:
        Path(export).write_text(E.to_text())
    rank = E.rank()
    size = len(elements)
    return BasisReport(n, r, rank == size and not duplicates, size, rank, tuple(duplicates))


# -- polynomials and generators --------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Integer combination of monomials, terms kept in construction order."""

    terms: tuple[tuple[Monomial, int], ...]

    def evaluate(self, M: ExactMatrix) -> CyclotomicNumber:
        acc = CyclotomicNumber.zero(M.r)
        for m, c in self.terms:
            acc = acc + evaluate_monomial(m, M) * c
        return acc

    @property
    def degree(self) -> int:
        return max((m.degree for m, _ in self.terms), default=0)

    def __str__(self) -> str:
        out = ""
        for idx, (m, c) in enumerate(self.terms):
            body = str(m)
            mag = abs(c)
            text = body if mag == 1 and body != "1" else (str(mag) if body == "1" else f"{mag}*{body}")
            if idx == 0:
                out = ("-" if c < 0 else "") + text
            else:
                out += (" - " if c < 0 else " + ") + text
        return out or "0"


@dataclass(frozen=True)
class Generator:
    family: str
    polynomial: Polynomial

    def __str__(self) -> str:
        return str(self.polynomial)


def _var(i: int, j: int, e: int = 1) -> Monomial:
    return Monomial((((i, j), e),))


def _generators(n: int, r: int, inhomogeneous: bool) -> list[Generator]:
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = []
    for i, j in cells:
        terms = [(_var(i, j, r + 1), 1)]
        if inhomogeneous:
            terms.append((_var(i, j), -1))
        out.append(Generator("power", Polynomial(tuple(terms))))
    for i in range(1, n + 1):
        for j, k in combinations(range(1, n + 1), 2):
            out.append(Generator("row_product", Polynomial(((_var(i, j) * _var(i, k), 1),))))
    for j in range(1, n + 1):
        for i, k in combinations(range(1, n + 1), 2):
            out.append(Generator("column_product", Polynomial(((_var(i, j) * _var(k, j), 1),))))
    tail = ((Monomial(), -1),) if inhomogeneous else ()
    for i in range(1, n + 1):
        terms = tuple((_var(i, j, r), 1) for j in range(1, n + 1)) + tail
        out.append(Generator("row_power_sum", Polynomial(terms)))
    for j in range(1, n + 1):
        terms = tuple((_var(i, j, r), 1) for i in range(1, n + 1)) + tail
        out.append(Generator("column_power_sum", Polynomial(terms)))
    return out


def ideal_generators(n: int, r: int) -> list[Generator]:
    """The five homogeneous families generating the graded ideal."""
    return _generators(n, r, inhomogeneous=False)


def vanishing_generators(n: int, r: int) -> list[Generator]:
    """Inhomogeneous versions, each vanishing on every group matrix."""
    return _generators(n, r, inhomogeneous=True)


def check_vanishing(n: int, r: int, cap: int = DEFAULT_BASIS_CAP) -> list[tuple[str, str]]:
    """Pairs ``(generator, element)`` where a vanishing generator is nonzero; empty means all vanish."""
    gens = vanishing_generators(n, r)
    failures = []
    for w in enumerate_group(n, r, cap):
        M = group_matrix(w)
        for g in gens:
            if g.polynomial.evaluate(M):
                failures.append((str(g), str(w)))
    return failures


# -- Toeplitz order ----------------------------------------------------------------


def toeplitz_variables(n: int) -> list[Point]:
    """Variables from largest to smallest: by antidiagonal ``i + j``, then row descending."""
    return sorted(((i, j) for i in range(1, n + 1) for j in range(1, n + 1)), key=lambda p: (p[0] + p[1], -p[0]))


def toeplitz_key(m: Monomial, n: int) -> tuple[int, ...]:
    exps = m.exponents
    return tuple(exps.get(p, 0) for p in toeplitz_variables(n))


def toeplitz_compare(m1: Monomial, m2: Monomial, n: int | None = None) -> int:
    """``-1``, ``0`` or ``1`` as ``m1`` is smaller than, equal to or greater than ``m2``."""
    if n is None:
        n = max((max(p) for p in m1.support | m2.support), default=1)
    k1, k2 = toeplitz_key(m1, n), toeplitz_key(m2, n)
    return (k1 > k2) - (k1 < k2)


def toeplitz_sorted(monomials: Sequence[Monomial], n: int | None = None, reverse: bool = False) -> list[Monomial]:
    return sorted(monomials, key=cmp_to_key(lambda a, b: toeplitz_compare(a, b, n)), reverse=reverse)
