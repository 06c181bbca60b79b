"""Exact binomials, box shapes and the multi-index lattice 0 <= m_j <= i_j."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError

__all__ = [
    "BoxShape",
    "MultiIndex",
    "as_shape",
    "binomial",
    "iter_multi_indices",
    "iter_strict_multi_indices",
]


@dataclass(frozen=True)
class BoxShape:
    """Dimensions ``(i_1, ..., i_n)`` of the box ``I_1 x ... x I_n`` with ``I_j = {1, ..., i_j}``."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        if not dims:
            raise DomainError("a box shape needs at least one dimension")
        for d in dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 1:
                raise DomainError(f"box dimensions must be integers >= 1, got {d!r}")
        object.__setattr__(self, "dims", dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    def cell_count(self) -> int:
        return math.prod(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __str__(self) -> str:
        return "x".join(map(str, self.dims))


ShapeLike = Union[BoxShape, Sequence[int]]


def as_shape(shape: ShapeLike) -> BoxShape:
    if isinstance(shape, BoxShape):
        return shape
    if isinstance(shape, int):
        return BoxShape((shape,))
    return BoxShape(tuple(shape))


@dataclass(frozen=True)
class MultiIndex:
    """A point ``(m_1, ..., m_n)`` of the lattice ``0 <= m_j <= i_j`` of a shape."""

    values: tuple[int, ...]
    shape: BoxShape

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != self.shape.n:
            raise DomainError(f"multi-index {values} has wrong length for shape {self.shape}")
        for m, d in zip(values, self.shape.dims):
            if not 0 <= m <= d:
                raise DomainError(f"multi-index {values} out of range for shape {self.shape}")
        object.__setattr__(self, "values", values)

    def total(self) -> int:
        return sum(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)`` for ``n, k >= 0``; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs n >= 0 and k >= 0, got n={n}, k={k}")
    return math.comb(n, k)


def _lattice(shape: BoxShape, upper: Iterable[int]) -> Iterator[MultiIndex]:
    # itertools.product varies the last coordinate fastest: lexicographic order
    for values in itertools.product(*(range(u + 1) for u in upper)):
        yield MultiIndex(values, shape)


def iter_multi_indices(shape: ShapeLike) -> Iterator[MultiIndex]:
    """All ``(m_1, ..., m_n)`` with ``0 <= m_j <= i_j`` in lexicographic order."""
    shape = as_shape(shape)
    return _lattice(shape, shape.dims)


def iter_strict_multi_indices(shape: ShapeLike) -> Iterator[MultiIndex]:
    """All ``(m_1, ..., m_n)`` with ``0 <= m_j < i_j`` in lexicographic order."""
    shape = as_shape(shape)
    return _lattice(shape, (d - 1 for d in shape.dims))
