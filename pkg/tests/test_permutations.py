from itertools import permutations as all_orders

import pytest
from hypothesis import given, strategies as st

from core.errors import DomainError
from services.permutations import (
    PATTERN_4132,
    PATTERN_51342,
    avoids,
    contains_pattern,
    descents,
    every_4132_in_51342,
    first_uncovered_4132,
    has_double_descent,
    identity,
    inverse,
    is_alternating,
    is_double_simsun,
    is_permutation,
    is_simsun,
    pattern_occurrences,
    restrict,
    simsun_witness,
    statistics,
    validate,
)

PATTERNS_3 = list(all_orders((1, 2, 3)))


def perms(max_n=8):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


def test_validate_rejects_non_permutations():
    assert is_permutation((2, 3, 1))
    assert not is_permutation((1, 1, 2))
    with pytest.raises(DomainError):
        validate((0, 1))
    assert validate([3, 1, 2]) == (3, 1, 2)


def test_inverse_and_restrict():
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert restrict((2, 4, 3, 5, 1), 3) == (2, 3, 1)
    assert restrict((2, 1), 0) == ()
    with pytest.raises(DomainError):
        restrict((2, 1), 3)


def test_descents_are_one_based():
    assert descents((2, 4, 3, 5, 1)) == [2, 4]
    assert descents(identity(5)) == []
    assert has_double_descent((3, 2, 1))
    assert not has_double_descent((2, 1, 3))


def test_simsun_witness_reports_least_k():
    assert simsun_witness((2, 4, 3, 5, 1)) == (4, (4, 3, 1))
    assert not is_simsun((2, 4, 3, 5, 1))
    assert simsun_witness((3, 5, 1, 4, 2)) is None


def test_double_simsun():
    assert is_double_simsun((3, 5, 1, 4, 2))
    assert is_double_simsun(())
    # 312 is simsun and so is its inverse 231
    assert is_double_simsun((3, 1, 2))
    assert not is_double_simsun((3, 2, 1))


def test_is_alternating_uses_down_up():
    assert is_alternating((2, 1, 3))
    assert is_alternating((1,))
    assert not is_alternating((1, 2))
    assert sum(1 for s in all_orders(range(1, 5)) if is_alternating(s)) == 5


@given(perms(), st.sampled_from(PATTERNS_3))
def test_length3_fast_path_matches_brute_force(sigma, pattern):
    assert contains_pattern(sigma, pattern) == bool(pattern_occurrences(sigma, pattern))


@given(perms(7))
def test_simsun_is_restriction_closed(sigma):
    expected = all(not has_double_descent(restrict(sigma, k)) for k in range(len(sigma) + 1))
    assert is_simsun(sigma) == expected


def test_pattern_occurrences_positions():
    assert pattern_occurrences((2, 3, 1), (2, 3, 1)) == [(1, 2, 3)]
    assert pattern_occurrences((1, 2, 3), (1, 2)) == [(1, 2), (1, 3), (2, 3)]
    assert avoids((3, 1, 2), [(2, 3, 1), (1, 2, 3)])
    assert not contains_pattern((1, 2), (1, 2, 3))


def test_4132_inside_51342():
    assert first_uncovered_4132(PATTERN_4132) == (1, 2, 3, 4)
    assert not every_4132_in_51342(PATTERN_4132)
    assert every_4132_in_51342(PATTERN_51342)
    assert every_4132_in_51342(identity(6))


def test_statistics():
    stats = statistics((2, 3, 1, 5, 4, 6, 8, 9, 7))
    assert stats.excedances == 5
    assert stats.fixed_points == 1
    assert stats.descent_count == 3
    assert statistics((5, 1, 3, 2, 4, 8, 6, 7)).inversions == 7
    assert statistics(()) == (0, 0, 0, 0)


@pytest.mark.parametrize("n", range(0, 9))
def test_double_simsun_closed_under_inverse(n):
    for sigma in all_orders(range(1, n + 1)):
        assert inverse(inverse(sigma)) == sigma
        assert is_double_simsun(sigma) == is_double_simsun(inverse(sigma))


def test_single_4132_in_35142():
    assert pattern_occurrences((3, 5, 1, 4, 2), (4, 1, 3, 2)) == [(2, 3, 4, 5)]


@pytest.mark.parametrize("n", range(0, 10))
def test_reversal_has_every_inversion(n):
    assert statistics(tuple(range(n, 0, -1))).inversions == n * (n - 1) // 2
