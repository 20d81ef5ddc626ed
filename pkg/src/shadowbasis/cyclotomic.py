"""Exact arithmetic in the cyclotomic field Q(w_r) and dense matrices over it.

An element is a vector of ``phi(r)`` rationals: the coefficients of a
polynomial in ``w = exp(2*pi*i/r)`` reduced modulo the cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

IntPoly = tuple[int, ...]  # constant term first


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    num = list(num)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        coef = Fraction(num[-1]) / lead
        if coef.denominator == 1:
            coef = coef.numerator
        quot[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] -= coef * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return quot, num


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> IntPoly:
    """Integer coefficients of the r-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_poly(4)
    (1, 0, 1)
    """
    if r < 1:
        raise ValueError("r must be positive")
    num: list = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            quot, rem = _poly_divmod(num, cyclotomic_poly(d))
            assert not rem, f"Phi_{d} does not divide x^{r}-1"
            num = quot
    return tuple(int(c) for c in num)


class _Field:
    """Per-modulus reduction data."""

    def __init__(self, r: int):
        self.r = r
        self.phi = cyclotomic_poly(r)
        self.degree = len(self.phi) - 1
        # reduced images of x^k for k < 2*degree - 1 and of w^k for k < r
        self.reduce_table = [self._reduce_power(k) for k in range(max(2 * self.degree - 1, 1))]
        self.roots = [self._reduce_power(k) for k in range(r)]

    def _reduce_power(self, k: int) -> tuple[int, ...]:
        _, rem = _poly_divmod([0] * k + [1], self.phi)
        rem = [int(c) for c in rem] + [0] * (self.degree - len(rem))
        return tuple(rem)


@lru_cache(maxsize=None)
def _field(r: int) -> _Field:
    return _Field(r)


class CyclotomicNumber:
    """An element of Q(w_r); immutable."""

    __slots__ = ("r", "coords")

    def __init__(self, r: int, coords: Iterable):
        self.r = r
        self.coords = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)
        if len(self.coords) != _field(r).degree:
            raise ValueError(f"expected {_field(r).degree} coordinates for r={r}")

    @classmethod
    def from_int(cls, value, r: int) -> CyclotomicNumber:
        return cls(r, (value,) + (0,) * (_field(r).degree - 1))

    @classmethod
    def zero(cls, r: int) -> CyclotomicNumber:
        return cls.from_int(0, r)

    @classmethod
    def one(cls, r: int) -> CyclotomicNumber:
        return cls.from_int(1, r)

    @classmethod
    def root(cls, k: int, r: int) -> CyclotomicNumber:
        """``w_r ** k``."""
        return cls(r, _field(r).roots[k % r])

    @classmethod
    def from_poly(cls, coeffs: Sequence, r: int) -> CyclotomicNumber:
        """Reduce ``sum coeffs[k] * w**k`` modulo the cyclotomic polynomial."""
        deg = _field(r).degree
        out = [Fraction(0)] * deg
        for k, c in enumerate(coeffs):
            if c:
                for t, v in enumerate(_field(r).roots[k % r]):
                    if v:
                        out[t] += c * v
        return cls(r, out)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.r != self.r:
                raise ValueError(f"moduli differ: {self.r} vs {other.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_int(other, self.r)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.r, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.r, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.r, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = _field(self.r)
        if f.degree == 1:
            return CyclotomicNumber(self.r, (self.coords[0] * other.coords[0],))
        conv = [Fraction(0)] * (2 * f.degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        out = [Fraction(0)] * f.degree
        for k, c in enumerate(conv):
            if c:
                for t, v in enumerate(f.reduce_table[k]):
                    if v:
                        out[t] += c * v
        return CyclotomicNumber(self.r, out)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm over Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        f = _field(self.r)
        if f.degree == 1:
            return CyclotomicNumber(self.r, (1 / self.coords[0],))
        # invariant: s * a == rem (mod phi); phi irreducible, so rem reaches a nonzero constant
        old_rem, rem = [Fraction(c) for c in f.phi], _trim(list(self.coords))
        old_s, s = [Fraction(0)], [Fraction(1)]
        while len(rem) > 1:
            quot, nxt = _poly_divmod(old_rem, rem)
            old_rem, rem = rem, _trim(nxt)
            old_s, s = s, _poly_sub(old_s, _poly_mul(quot, s))
        inv = [c / rem[0] for c in s]
        return CyclotomicNumber.from_poly(_reduce_mod(inv, f.phi), self.r)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugate: ``w -> w**(-1)``."""
        return CyclotomicNumber.from_poly(_conj_poly(self.coords, self.r), self.r)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_int(other, self.r)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.r == other.r and self.coords == other.coords

    def __hash__(self):
        return hash((self.r, self.coords))

    def as_rational(self) -> Fraction | None:
        """The value as a rational when it lies in Q, else None."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def to_complex(self) -> complex:
        import cmath

        w = cmath.exp(2j * cmath.pi / self.r)
        return sum(float(c) * w**k for k, c in enumerate(self.coords))

    def to_text(self) -> str:
        return ",".join(f"{c.numerator}/{c.denominator}" for c in self.coords)

    @classmethod
    def from_text(cls, text: str, r: int) -> CyclotomicNumber:
        return cls(r, [Fraction(part) for part in text.split(",")])

    def __repr__(self) -> str:
        return f"CyclotomicNumber(r={self.r}, {self})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _reduce_mod(p: Sequence, modulus: Sequence) -> list:
    _, rem = _poly_divmod(p, modulus)
    return rem


def _conj_poly(coords: Sequence, r: int) -> list:
    out = [Fraction(0)] * r
    for k, c in enumerate(coords):
        out[(-k) % r] += c
    return out


class ExactMatrix:
    """Dense matrix of ``CyclotomicNumber`` entries sharing one modulus."""

    def __init__(self, rows: Sequence[Sequence[CyclotomicNumber]], r: int):
        self.r = r
        self.entries = [list(row) for row in rows]
        if self.entries and len({len(row) for row in self.entries}) != 1:
            raise ValueError("matrix rows must have equal length")
        for row in self.entries:
            for x in row:
                if x.r != r:
                    raise ValueError("all entries must share the modulus")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, size: int, r: int) -> ExactMatrix:
        zero, one = CyclotomicNumber.zero(r), CyclotomicNumber.one(r)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)], r)

    def __getitem__(self, key: tuple[int, int]) -> CyclotomicNumber:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.r == other.r and self.entries == other.entries

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = CyclotomicNumber.zero(self.r)
        out = []
        for row in self.entries:
            new = []
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                new.append(acc)
            out.append(new)
        return ExactMatrix(out, self.r)

    def rank(self) -> int:
        return _eliminate([row[:] for row in self.entries], None)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        aug = ExactMatrix.identity(self.rows, self.r).entries
        work = [row[:] for row in self.entries]
        if _eliminate(work, aug, reduce=True) != self.rows:
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix(aug, self.r)

    def to_text(self) -> str:
        lines = [f"exact-matrix {self.rows} {self.cols} r={self.r}"]
        lines += [" ".join(x.to_text() for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ExactMatrix:
        header, *body = [line for line in text.splitlines() if line.strip()]
        _, rows, cols, rtag = header.split()
        r = int(rtag.removeprefix("r="))
        entries = [[CyclotomicNumber.from_text(cell, r) for cell in line.split()] for line in body]
        if len(entries) != int(rows) or any(len(row) != int(cols) for row in entries):
            raise ValueError("matrix text does not match its header")
        return cls(entries, r)


def _eliminate(work: list[list[CyclotomicNumber]], aug: list[list[CyclotomicNumber]] | None,
               reduce: bool = False) -> int:
    """In-place Gaussian elimination; returns the rank.

    The pivot in each column is taken from the row with the fewest nonzero
    entries, which keeps fill-in (and so coefficient growth) down.  With
    ``reduce`` the pivot rows are normalised and cleared above as well, so
    ``aug`` ends up multiplied by the inverse.
    """
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        candidates = [i for i in range(rank, nrows) if work[i][col]]
        if not candidates:
            continue
        piv = min(candidates, key=lambda i: sum(1 for x in work[i][col:] if x))
        work[rank], work[piv] = work[piv], work[rank]
        if aug is not None:
            aug[rank], aug[piv] = aug[piv], aug[rank]
        prow = work[rank]
        inv = prow[col].inverse()
        if reduce:
            prow = work[rank] = [x * inv if x else x for x in prow]
            if aug is not None:
                aug[rank] = [x * inv if x else x for x in aug[rank]]
            targets = [i for i in range(nrows) if i != rank]
        else:
            targets = range(rank + 1, nrows)
        nz = [j for j in range(col, ncols) if prow[j]]
        aug_nz = [j for j, x in enumerate(aug[rank]) if x] if aug is not None else []
        for i in targets:
            entry = work[i][col]
            if not entry:
                continue
            factor = entry if reduce else entry * inv
            row = work[i]
            for j in nz:
                row[j] = row[j] - factor * prow[j]
            if aug is not None:
                arow, prow_aug = aug[i], aug[rank]
                for j in aug_nz:
                    arow[j] = arow[j] - factor * prow_aug[j]
        rank += 1
    return rank
