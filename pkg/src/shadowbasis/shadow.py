"""Viennot shadow lines, iterated shadow sets, Schensted insertion and shadow monomials."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable

from . import _accel
from .errors import InvalidInputError
from .monomial import Monomial
from .perms import ColoredPermutation, Permutation, diagram

Point = tuple[int, int]
Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ShadowLine:
    points: tuple[Point, ...]
    corners: tuple[Point, ...]


@dataclass(frozen=True)
class ShadowDecomposition:
    lines: tuple[ShadowLine, ...]
    shadow_set: frozenset[Point]
    horizontal_ray_ys: tuple[int, ...]
    vertical_ray_xs: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "lines": [
                {"points": [list(p) for p in line.points], "corners": [list(c) for c in line.corners]}
                for line in self.lines
            ],
            "shadow_set": [list(p) for p in sorted(self.shadow_set)],
            "horizontal_rays": list(self.horizontal_ray_ys),
            "vertical_rays": list(self.vertical_ray_xs),
        }


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.P)


def _validate(points: Iterable[Point]) -> list[Point]:
    pts = sorted(points)
    xs = [p[0] for p in pts]
    ys = sorted(p[1] for p in pts)
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise InvalidInputError("points must occupy distinct rows and distinct columns")
    return pts


def shadow_lines(points: Iterable[Point]) -> ShadowDecomposition:
    """Decompose a rook placement into shadow lines.

    Sweep points by increasing x.  Each point joins the earliest line whose
    current lowest y lies above it, leaving a corner at (x_new, y_prev);
    otherwise it opens a new line.  Line bottoms stay sorted, so the search
    is a bisection.
    """
    pts = _validate(points)
    bottoms: list[int] = []
    members: list[list[Point]] = []
    corners: list[list[Point]] = []
    for x, y in pts:
        k = bisect_left(bottoms, y)
        if k == len(bottoms):
            bottoms.append(y)
            members.append([(x, y)])
            corners.append([])
        else:
            corners[k].append((x, bottoms[k]))
            bottoms[k] = y
            members[k].append((x, y))
    lines = tuple(ShadowLine(tuple(m), tuple(c)) for m, c in zip(members, corners))
    return ShadowDecomposition(
        lines=lines,
        shadow_set=frozenset(c for cs in corners for c in cs),
        horizontal_ray_ys=tuple(bottoms),
        vertical_ray_xs=tuple(m[0][0] for m in members),
    )


def iterated_shadows(points: Iterable[Point]) -> TableauPair:
    """Rows of (P, Q) read from the rays of successive shadow decompositions."""
    current = frozenset(_validate(points))
    p_rows, q_rows = [], []
    while current:
        dec = shadow_lines(current)
        p_rows.append(dec.horizontal_ray_ys)
        q_rows.append(dec.vertical_ray_xs)
        current = dec.shadow_set
    return TableauPair(tuple(p_rows), tuple(q_rows))


def shadow_iterations(points: Iterable[Point]) -> list[ShadowDecomposition]:
    """All decompositions produced while iterating on shadow sets."""
    out = []
    current = frozenset(_validate(points))
    while current:
        dec = shadow_lines(current)
        out.append(dec)
        current = dec.shadow_set
    return out


def schensted_insert(w: Permutation | Iterable[int]) -> TableauPair:
    """Row-insertion Robinson-Schensted."""
    word = w.one_line if isinstance(w, Permutation) else tuple(w)
    P, Q = _accel.rsk(word)
    return TableauPair(tuple(tuple(row) for row in P), tuple(tuple(row) for row in Q))


def shadow_monomial(w: ColoredPermutation) -> Monomial:
    """Exponent ``l`` on layer ``C_l`` (1 <= l < r) and exponent ``r`` on the shadow set of ``C_0``."""
    layers = diagram(w)
    exps: dict[Point, int] = {}
    for color in range(1, w.r):
        for p in layers[color]:
            exps[p] = color
    for p in shadow_lines(layers[0]).shadow_set:
        exps[p] = w.r
    return Monomial.from_exponents(exps)


def shadow_monomial_of_permutation(w: Permutation) -> Monomial:
    return Monomial.from_points(shadow_lines(w.points()).shadow_set)
