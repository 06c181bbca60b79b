import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from fullproj import (
    DomainError,
    alternating_sum,
    check_identity,
    count_fully_projected,
    count_sequence,
)
from fullproj.oracle import oracle_count

ORACLE_SHAPES = [(2, 2), (3, 2), (4, 2), (3, 3), (2, 2, 2), (4, 4), (2, 2, 2, 2), (1, 1, 2), (5, 3)]


@pytest.mark.parametrize("shape,k,expected", [
    ((2, 2), 2, 2),
    ((2, 2), 1, 0),
    ((2, 2), 4, 1),
    ((1, 1, 2), 2, 1),
    ((5,), 5, 1),
    ((3, 3), 3, 6),
])
def test_count_examples(shape, k, expected):
    assert count_fully_projected(shape, k) == expected


@pytest.mark.parametrize("k", [0, 5, -1])
def test_count_rejects_out_of_range_k(k):
    with pytest.raises(DomainError):
        count_fully_projected((2, 2), k)


def test_sequence_examples():
    assert count_sequence((2, 2)).as_list() == [0, 2, 4, 1]
    assert count_sequence((1,)).as_list() == [1]
    assert count_sequence((2,)).as_list() == [0, 1]
    # regression, frozen from the brute-force oracle
    assert count_sequence((3, 3)).as_list() == [0, 0, 6, 45, 90, 78, 36, 9, 1]


@pytest.mark.parametrize("shape", ORACLE_SHAPES)
def test_formula_matches_oracle(shape):
    seq = count_sequence(shape)
    assert seq.as_list() == [oracle_count(shape, k) for k in range(1, len(seq) + 1)]


@pytest.mark.parametrize("shape", ORACLE_SHAPES)
def test_support_and_top(shape):
    seq = count_sequence(shape)
    for k in range(1, max(shape)):
        assert seq[k] == 0
    assert seq[len(seq)] == 1


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (4, 2), (3, 3), (4, 4), (5, 3)])
def test_removing_one_cell_keeps_projections(m, n):
    assert count_fully_projected((m, n), m * n - 1) == m * n == oracle_count((m, n), m * n - 1)


def test_permutation_symmetry():
    for dims in [(4, 2), (1, 1, 2), (3, 2, 2), (2, 3, 2)]:
        expected = count_sequence(dims).as_list()
        for perm in itertools.permutations(dims):
            assert count_sequence(perm).as_list() == expected


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(lambda d: len(d) and math.prod(d) <= 40))
def test_term_order_does_not_matter(dims):
    for k in range(1, math.prod(dims) + 1):
        assert count_fully_projected(dims, k) == count_fully_projected(dims, k, reverse=True) >= 0


def test_alternating_sum_examples():
    assert alternating_sum((2, 2)) == 1
    assert alternating_sum((2,)) == -1
    for n in range(1, 6):
        assert alternating_sum((1,) * n) == 1


@pytest.mark.parametrize("dims,total,stated,derived", [
    ((2, 2), 1, 1, 1),
    ((2,), -1, 1, -1),
    ((1,), 1, -1, 1),
    ((1, 1, 1), 1, -1, 1),
])
def test_identity_reports(dims, total, stated, derived):
    report = check_identity(dims)
    assert report.alternating_sum == total
    assert report.stated_sign == stated and report.derived_sign == derived
    assert report.matches_stated == (total == stated)
    assert report.matches_derived


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=4).filter(lambda d: math.prod(d) <= 60))
def test_sign_law(dims):
    report = check_identity(dims)
    assert report.alternating_sum == (-1) ** (sum(dims) - len(dims))
    assert (report.stated_sign == report.derived_sign) == (len(dims) % 2 == 0)
    assert report.alternating_sum in (-1, 1)
