import pytest
from hypothesis import given, strategies as st

from fullproj import BoxShape, DomainError, MultiIndex, binomial, iter_multi_indices, iter_strict_multi_indices


def pascal_rows(n_max):
    # independent of binomial(): built by repeated addition only
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


PASCAL = pascal_rows(40)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (0, 0, 1), (0, 3, 0), (10, 3, 120), (3, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal_triangle():
    for n, row in enumerate(PASCAL):
        assert [binomial(n, k) for k in range(n + 1)] == row
        assert binomial(n, n + 1) == 0


def test_pascal_symmetry_and_row_sums():
    for n in range(41):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
            if k >= 1:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
        assert sum(binomial(n, k) for k in range(n + 1)) == 2 ** n


def test_alternating_row_sum_from_one_is_one():
    for big_n in range(1, 41):
        assert sum((-1) ** (k - 1) * binomial(big_n, k) for k in range(1, big_n + 1)) == 1


def test_binomial_is_exact_for_huge_n():
    n = 10 ** 30
    assert binomial(n, 2) == n * (n - 1) // 2


def test_binomial_rejects_negative():
    with pytest.raises(DomainError):
        binomial(-1, 0)
    with pytest.raises(DomainError):
        binomial(3, -1)


@pytest.mark.parametrize("dims", [(), (0,), (2, -1), (1.5,)])
def test_box_shape_validation(dims):
    with pytest.raises(DomainError):
        BoxShape(dims)


def test_box_shape_basics():
    shape = BoxShape((2, 3, 4))
    assert shape.n == 3 and shape.cell_count() == 24 and str(shape) == "2x3x4"


def test_multi_index_validation():
    shape = BoxShape((2, 2))
    MultiIndex((2, 0), shape)
    with pytest.raises(DomainError):
        MultiIndex((3, 0), shape)
    with pytest.raises(DomainError):
        MultiIndex((0,), shape)


def test_iter_examples():
    assert [tuple(m) for m in iter_multi_indices((1,))] == [(0,), (1,)]
    idx = [tuple(m) for m in iter_multi_indices((2, 2))]
    assert len(idx) == 9 and idx[0] == (0, 0) and idx[-1] == (2, 2)
    assert len(list(iter_multi_indices((1, 1, 1)))) == 8
    assert [tuple(m) for m in iter_strict_multi_indices((1,))] == [(0,)]
    assert len(list(iter_strict_multi_indices((2, 2)))) == 4
    assert [tuple(m) for m in iter_strict_multi_indices((3,))] == [(0,), (1,), (2,)]


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_iteration_is_complete_distinct_and_lexicographic(dims):
    full = [tuple(m) for m in iter_multi_indices(dims)]
    expected = 1
    for d in dims:
        expected *= d + 1
    assert len(full) == expected == len(set(full))
    assert full == sorted(full)
    strict = [tuple(m) for m in iter_strict_multi_indices(dims)]
    assert strict == [m for m in full if all(x < d for x, d in zip(m, dims))]
