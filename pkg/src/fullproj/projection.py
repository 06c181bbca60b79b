"""Counting fully-projected k-subsets of a box by inclusion-exclusion.

A k-subset ``S`` of ``M = I_1 x ... x I_n`` is fully projected when its image
under every coordinate projection is the whole of ``I_j``.  Excluding, for
each coordinate ``j``, the subsets that avoid some value ``r`` and applying
inclusion-exclusion over how many values are avoided per coordinate gives

    t_k = sum_{0 <= m_j <= i_j} (-1)^(m_1+...+m_n)
              * prod_j C(i_j, m_j) * C(prod_j (i_j - m_j), k)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .multiindex import BoxShape, ShapeLike, as_shape, binomial, iter_multi_indices

__all__ = [
    "CountSequence",
    "IdentityReport",
    "alternating_sum",
    "check_identity",
    "count_fully_projected",
    "count_sequence",
    "inclusion_exclusion_terms",
]


@dataclass(frozen=True)
class CountSequence:
    """``counts[k - 1] = t_k`` for ``k = 1, ..., prod(dims)``."""

    shape: BoxShape
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        # 1-based, matching the k of t_k
        if not 1 <= k <= len(self.counts):
            raise IndexError(k)
        return self.counts[k - 1]

    def __len__(self) -> int:
        return len(self.counts)

    def as_list(self) -> list[int]:
        return list(self.counts)


@dataclass(frozen=True)
class IdentityReport:
    shape: BoxShape
    alternating_sum: int
    stated_sign: int
    derived_sign: int
    matches_stated: bool
    matches_derived: bool

    def as_dict(self) -> dict:
        return {
            "dims": list(self.shape.dims),
            "alternating_sum": self.alternating_sum,
            "stated_sign": self.stated_sign,
            "derived_sign": self.derived_sign,
            "matches_stated": self.matches_stated,
            "matches_derived": self.matches_derived,
        }


@lru_cache(maxsize=None)
def _coordinate_binomials(dims: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(binomial(d, m) for m in range(d + 1)) for d in dims)


def inclusion_exclusion_terms(shape: ShapeLike, reverse: bool = False) -> list[tuple[int, int]]:
    """``(signed coefficient, surviving cell count)`` for every multi-index.

    The coefficient is ``(-1)^(sum m_j) * prod_j C(i_j, m_j)`` and the cell
    count is ``prod_j (i_j - m_j)``.
    """
    shape = as_shape(shape)
    table = _coordinate_binomials(shape.dims)
    terms = []
    for index in iter_multi_indices(shape):
        coeff = math.prod(table[j][m] for j, m in enumerate(index))
        if index.total() % 2:
            coeff = -coeff
        cells = math.prod(d - m for d, m in zip(shape.dims, index))
        terms.append((coeff, cells))
    if reverse:
        terms.reverse()
    return terms


def count_fully_projected(shape: ShapeLike, k: int, *, reverse: bool = False) -> int:
    """Number of fully-projected ``k``-subsets of the box, ``1 <= k <= prod(dims)``."""
    shape = as_shape(shape)
    if not 1 <= k <= shape.cell_count():
        raise DomainError(f"k must satisfy 1 <= k <= {shape.cell_count()} for shape {shape}, got {k}")
    return sum(coeff * binomial(cells, k) for coeff, cells in inclusion_exclusion_terms(shape, reverse))


def count_sequence(shape: ShapeLike) -> CountSequence:
    shape = as_shape(shape)
    counts = tuple(count_fully_projected(shape, k) for k in range(1, shape.cell_count() + 1))
    return CountSequence(shape, counts)


def alternating_sum(shape: ShapeLike) -> int:
    """``sum_k (-1)^(k-1) t_k`` over ``k = 1, ..., prod(dims)``."""
    seq = count_sequence(shape)
    return sum(t if k % 2 else -t for k, t in enumerate(seq.counts, start=1))


def check_identity(shape: ShapeLike) -> IdentityReport:
    """Compare the alternating sum with both ``(-1)^sum(i_j)`` and ``(-1)^sum(i_j - 1)``."""
    shape = as_shape(shape)
    total = alternating_sum(shape)
    stated_sign = -1 if sum(shape.dims) % 2 else 1
    derived_sign = -1 if (sum(shape.dims) - shape.n) % 2 else 1
    return IdentityReport(
        shape=shape,
        alternating_sum=total,
        stated_sign=stated_sign,
        derived_sign=derived_sign,
        matches_stated=total == stated_sign,
        matches_derived=total == derived_sign,
    )
