"""Brute-force ground truth: enumerate subsets as bitmasks and test the definitions directly.

Box cells are numbered in coordinate-lexicographic order with the last
coordinate varying fastest; cell ``i`` is bit ``i`` of a subset mask.  Board
cells are numbered in sorted ``(row, column)`` order.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from functools import lru_cache

from .errors import DomainError, LimitExceededError
from .multiindex import ShapeLike, as_shape

__all__ = [
    "DEFAULT_ORACLE_LIMIT",
    "box_cells",
    "subset_mask",
    "is_fully_projected",
    "oracle_histogram",
    "oracle_count",
    "oracle_rook",
    "oracle_dual_rook",
    "oracle_rook_histogram",
    "oracle_dual_rook_histogram",
]

DEFAULT_ORACLE_LIMIT = 24


def box_cells(shape: ShapeLike) -> list[tuple[int, ...]]:
    """Cells of the box as 1-based coordinate tuples, in mask bit order."""
    shape = as_shape(shape)
    return list(itertools.product(*(range(1, d + 1) for d in shape.dims)))


def subset_mask(shape: ShapeLike, cells: Iterable[Sequence[int]]) -> int:
    """Bitmask of a set of 1-based cells of the box."""
    shape = as_shape(shape)
    mask = 0
    for cell in cells:
        cell = tuple(cell)
        if len(cell) != shape.n or any(not 1 <= a <= d for a, d in zip(cell, shape.dims)):
            raise DomainError(f"cell {cell} is not in box {shape}")
        bit = 0
        for a, d in zip(cell, shape.dims):
            bit = bit * d + (a - 1)
        mask |= 1 << bit
    return mask


@lru_cache(maxsize=None)
def _fibre_masks(dims: tuple[int, ...]) -> tuple[int, ...]:
    # one mask per (coordinate j, value a): the cells whose j-th coordinate is a
    cells = box_cells(dims)
    fibres = []
    for j, d in enumerate(dims):
        for a in range(1, d + 1):
            fibres.append(sum(1 << i for i, c in enumerate(cells) if c[j] == a))
    return tuple(fibres)


def is_fully_projected(shape: ShapeLike, subset: int) -> bool:
    """True iff every value of every coordinate occurs among the selected cells."""
    shape = as_shape(shape)
    if subset < 0 or subset >> shape.cell_count():
        raise DomainError(f"mask {subset:#x} is wider than the {shape.cell_count()} cells of {shape}")
    return all(subset & fibre for fibre in _fibre_masks(shape.dims))


def _check_limit(what: str, size: int, limit: int | None) -> None:
    limit = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if size > limit:
        raise LimitExceededError(what, size, limit)


def _scan_masks(width: int, accept) -> tuple[list[int], int]:
    hist = [0] * (width + 1)
    visited = 0
    for mask in range(1 << width):
        visited += 1
        if accept(mask):
            hist[mask.bit_count()] += 1
    return hist, visited


@lru_cache(maxsize=64)
def _box_histogram(dims: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    fibres = _fibre_masks(dims)
    hist, visited = _scan_masks(len(box_cells(dims)), lambda s: all(s & f for f in fibres))
    return tuple(hist), visited


def oracle_histogram(shape: ShapeLike, limit: int | None = None) -> tuple[list[int], int]:
    """Fully-projected subset counts by size, plus the number of masks visited.

    Entry ``k`` of the first list counts fully-projected ``k``-subsets; every
    one of the ``2**cells`` masks is visited exactly once.
    """
    shape = as_shape(shape)
    _check_limit(f"oracle on box {shape}", shape.cell_count(), limit)
    hist, visited = _box_histogram(shape.dims)
    return list(hist), visited


def oracle_count(shape: ShapeLike, k: int, limit: int | None = None) -> int:
    shape = as_shape(shape)
    if not 1 <= k <= shape.cell_count():
        raise DomainError(f"k must satisfy 1 <= k <= {shape.cell_count()} for shape {shape}, got {k}")
    return oracle_histogram(shape, limit)[0][k]


def _board_cells(board) -> list[tuple[int, int]]:
    # accepts a Board or any iterable of (row, column) pairs
    cells = getattr(board, "cells", board)
    return sorted(set(cells))


def _line_masks(cells: list[tuple[int, int]], axis: int) -> list[int]:
    groups: dict[int, int] = {}
    for i, cell in enumerate(cells):
        groups[cell[axis]] = groups.get(cell[axis], 0) | (1 << i)
    return [groups[key] for key in sorted(groups)]


def oracle_rook_histogram(board, limit: int | None = None) -> list[int]:
    """Non-attacking placements by size: at most one selected cell per row and per column."""
    cells = _board_cells(board)
    _check_limit("rook oracle on board", len(cells), limit)
    lines = _line_masks(cells, 0) + _line_masks(cells, 1)
    return _scan_masks(len(cells), lambda s: all((s & line).bit_count() <= 1 for line in lines))[0]


def oracle_dual_rook_histogram(board, limit: int | None = None) -> list[int]:
    """Covering placements by size: every occupied row and column gets a selected cell."""
    cells = _board_cells(board)
    _check_limit("dual rook oracle on board", len(cells), limit)
    lines = _line_masks(cells, 0) + _line_masks(cells, 1)
    return _scan_masks(len(cells), lambda s: all(s & line for line in lines))[0]


def _entry(hist: list[int], k: int) -> int:
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return hist[k] if k < len(hist) else 0


def oracle_rook(board, k: int, limit: int | None = None) -> int:
    return _entry(oracle_rook_histogram(board, limit), k)


def oracle_dual_rook(board, k: int, limit: int | None = None) -> int:
    return _entry(oracle_dual_rook_histogram(board, limit), k)
