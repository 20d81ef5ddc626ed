from hypothesis import given, strategies as st

from shadowbasis.partitions import (
    conjugate,
    contains,
    hook_lengths,
    is_partition,
    num_syt,
    num_syt_by_corners,
    partitions,
)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_reverse_lex_order():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_largest_part_bound():
    assert list(partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_hooks_of_2_1():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert num_syt((2, 1)) == 2


def test_empty_shape():
    assert num_syt(()) == 1
    assert conjugate(()) == ()


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_hook_formula_matches_corner_recursion(lam):
    assert num_syt(lam) == num_syt_by_corners(lam)


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_conjugate_is_involution(lam):
    assert is_partition(conjugate(lam))
    assert conjugate(conjugate(lam)) == lam
    assert num_syt(conjugate(lam)) == num_syt(lam)


def test_sum_of_squares_is_factorial():
    from math import factorial

    for n in range(8):
        assert sum(num_syt(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_contains():
    assert contains((3, 2), (2, 2))
    assert contains((3, 2), ())
    assert not contains((3, 2), (2, 2, 1))
    assert not contains((2,), (3,))
