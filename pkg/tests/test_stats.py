from math import factorial

import pytest
from hypothesis import given, strategies as st

from shadowbasis.errors import InvalidInputError, SizeLimitError
from shadowbasis.perms import parse_one_line, diagram
from shadowbasis.stats import (
    GradedSeries,
    StatTable,
    check_log_concave,
    check_unimodal,
    count_a,
    count_b,
    count_by_objects,
    count_c,
    count_fast,
    degree_histogram,
    hilbert_series,
    histogram_csv,
    lis_distribution,
    lis_points,
    table_json,
)


def test_lis_examples():
    w = parse_one_line("3^0,1^1,6^0,4^0,7^0,2^1,5^1")
    assert lis_points(diagram(w)[0]) == 3
    assert lis_points((i, v) for i, v in enumerate((5, 1, 3, 6, 7, 2, 4), 1)) == 4
    assert lis_points([]) == 0


def test_small_tables():
    assert count_a(3).counts == (0, 1, 4, 1)
    assert count_c(1, 2).counts == (0, 1, 1)
    assert count_b(3).total() == 48
    assert count_fast("c", 1, 5).counts == (0, 1, 1, 1, 1, 1)


def test_a_from_hooks():
    assert lis_distribution(3) == (0, 1, 4, 1)
    assert sum(lis_distribution(7)) == factorial(7)


@pytest.mark.parametrize("n, r", [(n, r) for n in range(5) for r in (1, 2, 3)])
def test_object_reference_matches_kernel(n, r):
    assert count_by_objects(n, r).counts == count_c(n, r).counts


def test_threaded_enumeration_matches_serial():
    assert count_c(5, 2, threads=2).counts == count_c(5, 2).counts


def test_kinds_are_specializations():
    for n in range(6):
        assert count_fast("a", n).counts == count_fast("c", n, 1).counts
        assert count_fast("b", n).counts == count_fast("c", n, 2).counts


def test_b_has_no_statistic_one():
    for n in range(2, 12):
        assert count_fast("b", n)[1] == 0


def test_top_degree_is_empty():
    for n in range(1, 6):
        for r in (1, 2, 3):
            s = hilbert_series(n, r)
            assert s.coeffs[r * n] == 0
            assert s.coeffs[0] == 1


def test_degree_histogram_matches_series():
    for n in range(5):
        for r in (1, 2, 3):
            if r ** n * factorial(n) > 2000:
                continue
            assert degree_histogram(n, r) == hilbert_series(n, r, "enumerate").coeffs


def test_caps_and_bounds():
    with pytest.raises(SizeLimitError):
        count_c(5, 3, cap=1000)
    with pytest.raises(SizeLimitError):
        count_fast("a", 65, max_n=64)
    with pytest.raises(InvalidInputError):
        count_fast("c", 3)


def test_series_text():
    assert str(hilbert_series(3, 1)) == "1 + 4*q + q^2"
    assert str(GradedSeries((0, 0), 0, 1)) == "0"


def test_log_concavity_examples():
    assert check_log_concave([1, 1, 1]).log_concave
    assert check_log_concave(count_fast("b", 8)).log_concave
    assert check_log_concave(count_fast("b", 9)).violations == (3,)
    assert check_log_concave([0, 0, 1, 3, 1, 0]).log_concave
    assert check_log_concave([1, 0, 1]).violations == (1,)


def test_unimodality_examples():
    rep = check_unimodal([1, 2, 1, 2])
    assert not rep.unimodal and rep.witness == (1, 2)
    assert check_unimodal([7]).unimodal
    assert check_unimodal([0, 1, 3, 3, 2, 0]).peak == 2
    assert check_unimodal([]).unimodal


@given(st.lists(st.integers(0, 50), max_size=12))
def test_log_concavity_reversal_invariant(seq):
    rev = check_log_concave(seq[::-1]).violations
    assert sorted(len(seq) - 1 - i for i in rev) == list(check_log_concave(seq).violations)


def test_histogram_csv(tmp_path):
    path = histogram_csv(count_fast("a", 10), tmp_path / "a10.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == "k,count"
    assert len(lines) == 11
    assert lines[1] == "1,1"
    empty = histogram_csv(None, tmp_path / "empty.csv")
    assert empty.read_text() == "k,count\n"
    with pytest.raises(OSError, match="missing"):
        histogram_csv(count_fast("a", 3), tmp_path / "missing" / "x.csv")


def test_table_json(tmp_path):
    import json

    data = json.loads(table_json(count_fast("b", 3), tmp_path / "b.json", cap=200).read_text())
    assert data["schema"] == 1
    assert {"kind", "n", "r", "path", "cap"} <= set(data)
    assert data["counts"]["3"] == "15"


def test_table_values_keys():
    t = StatTable("a", 2, 1, (0, 1, 1))
    assert t.values == {(2, 1): 1, (2, 2): 1}
    assert count_c(1, 3).values == {(1, 3, 1): 1, (1, 3, 2): 1, (1, 3, 3): 1}


def test_colored_statistic_example():
    from shadowbasis.stats import colored_statistic

    w = parse_one_line("4^2,1^0,5^2,6^3,2^1,3^0", 4)
    assert diagram(w)[0] == {(2, 1), (6, 3)}
    assert colored_statistic(w) == 16
    # w is one of the elements counted by c[6, 4, 16]
    assert count_fast("c", 6, 4)[16] >= 1
