import pytest
from hypothesis import given, strategies as st

from shadowbasis.errors import InvalidInputError
from shadowbasis.perms import Permutation, parse_one_line
from shadowbasis.shadow import (
    iterated_shadows,
    schensted_insert,
    shadow_iterations,
    shadow_lines,
    shadow_monomial,
    shadow_monomial_of_permutation,
)
from shadowbasis.stats import lis_points

W = Permutation((5, 1, 3, 6, 7, 2, 4))


def test_running_example_tableaux():
    pair = schensted_insert(W)
    assert pair.P == ((1, 2, 4, 7), (3, 6), (5,))
    assert pair.Q == ((1, 3, 4, 5), (2, 7), (6,))
    assert iterated_shadows(W.points()) == pair


def test_running_example_shadow_sets():
    first, second, third = shadow_iterations(W.points())
    assert first.shadow_set == {(2, 5), (6, 3), (7, 6)}
    assert first.horizontal_ray_ys == (1, 2, 4, 7)
    assert first.vertical_ray_xs == (1, 3, 4, 5)
    assert second.shadow_set == {(6, 5)}
    assert third.shadow_set == frozenset()


def test_identity_has_one_line():
    dec = shadow_lines(Permutation((1, 2, 3)).points())
    assert len(dec.lines) == 3
    assert dec.shadow_set == frozenset()
    pair = schensted_insert((1, 2, 3))
    assert pair.P == pair.Q == ((1, 2, 3),)


def test_empty_placement():
    dec = shadow_lines([])
    assert dec.lines == () and dec.shadow_set == frozenset()
    assert iterated_shadows([]).P == ()


def test_rejects_shared_row_or_column():
    with pytest.raises(InvalidInputError):
        shadow_lines([(1, 2), (1, 3)])
    with pytest.raises(InvalidInputError):
        shadow_lines([(1, 2), (3, 2)])


def test_colored_shadow_monomial():
    w = parse_one_line("2^1,5^0,3^0,1^0,6^0,4^1")
    m = shadow_monomial(w)
    assert m.exponents == {(1, 2): 1, (6, 4): 1, (3, 5): 2, (4, 3): 2}
    assert str(m) == "x[1,2]*x[3,5]^2*x[4,3]^2*x[6,4]"
    assert m.degree == 6


def test_decomposition_json_shape():
    d = shadow_lines(W.points()).to_dict()
    assert set(d) == {"lines", "shadow_set", "horizontal_rays", "vertical_rays"}
    assert d["shadow_set"] == [[2, 5], [6, 3], [7, 6]]


@st.composite
def rook(draw):
    n = draw(st.integers(0, 8))
    xs = draw(st.permutations(range(1, 12)))
    ys = draw(st.permutations(range(1, 12)))
    return list(zip(xs[:n], ys[:n]))


@given(rook())
def test_shadow_set_size_for_partial_placements(points):
    dec = shadow_lines(points)
    assert len(dec.shadow_set) == len(points) - len(dec.lines)
    assert len(dec.lines) == lis_points(points)


@given(st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_shadows_agree_with_insertion(word):
    w = Permutation(tuple(word))
    assert iterated_shadows(w.points()) == schensted_insert(w)
    assert shadow_monomial_of_permutation(w).degree == len(word) - lis_points(w.points())


@given(st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_insertion_of_inverse_swaps_tableaux(word):
    w = Permutation(tuple(word))
    a, b = schensted_insert(w), schensted_insert(w.inverse())
    assert (a.P, a.Q) == (b.Q, b.P)
