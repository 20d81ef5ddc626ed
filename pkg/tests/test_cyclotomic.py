import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shadowbasis.cyclotomic import CyclotomicNumber, ExactMatrix, cyclotomic_poly


@pytest.mark.parametrize(
    "r, coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
     (8, (1, 0, 0, 0, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomials(r, coeffs):
    assert cyclotomic_poly(r) == coeffs


@pytest.mark.parametrize("r", range(1, 13))
def test_polynomial_roots_numerically(r):
    # every primitive r-th root is a root, and the degree is Euler's phi
    from math import gcd

    phi = cyclotomic_poly(r)
    assert len(phi) - 1 == sum(1 for k in range(1, r + 1) if gcd(k, r) == 1)
    z = cmath.exp(2j * cmath.pi / r)
    assert abs(sum(c * z**k for k, c in enumerate(phi))) < 1e-9


def test_i_squared():
    i = CyclotomicNumber.root(1, 4)
    assert i * i == -1


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6, 8, 12])
def test_roots_of_unity(r):
    w = CyclotomicNumber.root(1, r)
    power = CyclotomicNumber.one(r)
    for _ in range(r):
        power = power * w
    assert power == 1
    for k in range(1, 2 * r):
        total = sum((CyclotomicNumber.root(j * k, r) for j in range(r)), CyclotomicNumber.zero(r))
        assert total == (r if k % r == 0 else 0)


def element(r):
    deg = len(cyclotomic_poly(r)) - 1
    frac = st.fractions(min_value=-20, max_value=20, max_denominator=9)
    return st.lists(frac, min_size=deg, max_size=deg).map(lambda c: CyclotomicNumber(r, c))


any_element = st.sampled_from([2, 3, 4, 6]).flatmap(lambda r: st.tuples(element(r), element(r), element(r)))


@settings(max_examples=500)
@given(any_element)
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(any_element)
def test_conjugate_matches_complex(triple):
    a = triple[0]
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-6
    assert abs((a * triple[1]).to_complex() - a.to_complex() * triple[1].to_complex()) < 1e-6


def test_text_roundtrip_and_rational():
    x = CyclotomicNumber(3, [Fraction(1, 2), Fraction(-3, 4)])
    assert x.to_text() == "1/2,-3/4"
    assert CyclotomicNumber.from_text(x.to_text(), 3) == x
    assert CyclotomicNumber.from_int(5, 3).as_rational() == 5
    assert x.as_rational() is None


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(3).inverse()


def test_moduli_must_match():
    with pytest.raises(ValueError):
        CyclotomicNumber.one(3) + CyclotomicNumber.one(4)


def _random_matrix(rng, size, r):
    deg = len(cyclotomic_poly(r)) - 1
    return ExactMatrix(
        [[CyclotomicNumber(r, [rng.randint(-3, 3) for _ in range(deg)]) for _ in range(size)] for _ in range(size)], r
    )


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_inverse_is_exact(r):
    import random

    rng = random.Random(r)
    for size in (1, 3, 6):
        M = _random_matrix(rng, size, r)
        if M.is_invertible():
            assert M @ M.inverse() == ExactMatrix.identity(size, r)
            assert M.inverse() @ M == ExactMatrix.identity(size, r)


def test_singular_matrix():
    one = CyclotomicNumber.one(3)
    M = ExactMatrix([[one, one], [one, one]], 3)
    assert M.rank() == 1 and not M.is_invertible()
    with pytest.raises(ZeroDivisionError):
        M.inverse()


def test_matrix_text_roundtrip():
    w = CyclotomicNumber.root(1, 3)
    M = ExactMatrix([[w, w * w], [CyclotomicNumber.one(3), CyclotomicNumber.zero(3)]], 3)
    text = M.to_text()
    assert text.splitlines()[0] == "exact-matrix 2 2 r=3"
    assert ExactMatrix.from_text(text) == M
