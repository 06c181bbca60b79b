"""Boards, skew Ferrers boards, rook and dual rook numbers.

Conventions for the dual numbers: "every row and every column" means every
*occupied* row and column of the board, and the empty board has
``R~_0 = R_0 = 1``.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .errors import DomainError, LimitExceededError
from .multiindex import binomial

__all__ = [
    "DEFAULT_IE_LIMIT",
    "Board",
    "SkewShape",
    "RookSequence",
    "LogConcavityReport",
    "board_from_skew",
    "rook_numbers",
    "dual_rook_numbers",
    "dual_polynomial_at_minus_one",
    "check_fulmek_range",
    "check_log_concavity",
    "enumerate_skew_shapes",
    "full_board",
]

DEFAULT_IE_LIMIT = 26

# rows per numpy block in the (S, T) sweep
_BLOCK = 1 << 10


@dataclass(frozen=True)
class Board:
    """A finite set of 1-based ``(row, column)`` cells."""

    cells: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        for r, c in cells:
            if r < 1 or c < 1:
                raise DomainError(f"board cells are 1-based, got {(r, c)}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_cells(cls, cells: Iterable[Sequence[int]]) -> "Board":
        """Build a board from a cell list, rejecting duplicates."""
        cells = [tuple(cell) for cell in cells]
        for cell in cells:
            if len(cell) != 2 or any(isinstance(a, bool) or not isinstance(a, int) for a in cell):
                raise DomainError(f"a cell is a pair of integers, got {cell!r}")
        if len(set(cells)) != len(cells):
            raise DomainError("duplicate cells in board")
        return cls(frozenset(cells))

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    @property
    def rows(self) -> list[int]:
        return sorted({r for r, _ in self.cells})

    @property
    def columns(self) -> list[int]:
        return sorted({c for _, c in self.cells})

    @property
    def dims(self) -> tuple[int, int]:
        if not self.cells:
            return (0, 0)
        return (max(r for r, _ in self.cells), max(c for _, c in self.cells))

    def transpose(self) -> "Board":
        return Board(frozenset((c, r) for r, c in self.cells))

    def canonical(self) -> "Board":
        """Drop empty rows and columns, renumbering the rest from 1."""
        row_rank = {r: i for i, r in enumerate(self.rows, start=1)}
        col_rank = {c: i for i, c in enumerate(self.columns, start=1)}
        return Board(frozenset((row_rank[r], col_rank[c]) for r, c in self.cells))

    def to_ascii(self) -> str:
        nrows, ncols = self.dims
        return "\n".join(
            "".join("#" if (r, c) in self.cells else "." for c in range(1, ncols + 1))
            for r in range(1, nrows + 1)
        )


def full_board(m: int, n: int) -> Board:
    return Board(frozenset(itertools.product(range(1, m + 1), range(1, n + 1))))


def _partition(parts: Sequence[int], name: str, minimum: int) -> tuple[int, ...]:
    parts = tuple(parts)
    for p in parts:
        if isinstance(p, bool) or not isinstance(p, int) or p < minimum:
            raise DomainError(f"{name} parts must be integers >= {minimum}, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError(f"{name} must be weakly decreasing, got {parts}")
    return parts


@dataclass(frozen=True)
class SkewShape:
    """A skew shape ``outer / inner``; ``inner`` is zero-padded to the length of ``outer``."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = _partition(self.outer, "outer partition", 1)
        inner = tuple(p for p in _partition(self.inner, "inner partition", 0))
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        if len(inner) > len(outer):
            raise DomainError(f"inner partition {inner} is longer than outer {outer}")
        inner = inner + (0,) * (len(outer) - len(inner))
        if any(m > l for m, l in zip(inner, outer)):
            raise DomainError(f"inner partition {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __str__(self) -> str:
        inner = tuple(m for m in self.inner if m)
        return ",".join(map(str, self.outer)) + "/" + ",".join(map(str, inner))


def board_from_skew(shape: SkewShape) -> Board:
    """Cells ``(r, c)`` with ``inner[r] < c <= outer[r]``."""
    return Board(frozenset(
        (r, c)
        for r, (lam, mu) in enumerate(zip(shape.outer, shape.inner), start=1)
        for c in range(mu + 1, lam + 1)
    ))


@dataclass(frozen=True)
class RookSequence:
    """``values[k]`` for ``k = 0, ..., len(board)``; ``flavor`` is ``plain`` (R_k) or ``dual`` (R~_k)."""

    board: Board
    values: tuple[int, ...]
    flavor: Literal["plain", "dual"]

    def as_list(self) -> list[int]:
        return list(self.values)


@dataclass(frozen=True)
class LogConcavityReport:
    values: tuple[int, ...]
    is_log_concave: bool
    first_violation: Optional[int] = None
    source: Optional[RookSequence] = None

    def as_dict(self) -> dict:
        return {
            "values": list(self.values),
            "is_log_concave": self.is_log_concave,
            "first_violation": self.first_violation,
        }


def rook_numbers(board: Board) -> RookSequence:
    """Rook numbers by a row-by-row sweep over the set of used columns."""
    cols = {c: i for i, c in enumerate(board.columns)}
    by_row: dict[int, list[int]] = {}
    for r, c in board.cells:
        by_row.setdefault(r, []).append(cols[c])
    # used-column mask -> number of placements using exactly those columns
    states = {0: 1}
    for r in sorted(by_row):
        nxt = dict(states)
        for used, ways in states.items():
            for bit in by_row[r]:
                if not used >> bit & 1:
                    key = used | (1 << bit)
                    nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    values = [0] * (len(board) + 1)
    for used, ways in states.items():
        values[used.bit_count()] += ways
    return RookSequence(board, tuple(values), "plain")


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def dual_rook_numbers(board: Board, limit: int | None = None) -> RookSequence:
    """Dual rook numbers by inclusion-exclusion over excluded row and column sets.

    For every set ``S`` of occupied rows and ``T`` of occupied columns, the
    cells meeting neither contribute ``(-1)^(|S|+|T|) C(count, k)``.
    """
    limit = DEFAULT_IE_LIMIT if limit is None else limit
    cells = board.sorted_cells()
    if len(cells) > 63:
        raise LimitExceededError("dual rook numbers: board cells", len(cells), 63)
    rows, cols = board.rows, board.columns
    nlines = len(rows) + len(cols)
    if nlines > limit:
        raise LimitExceededError("dual rook numbers: occupied rows + columns", nlines, limit)

    def line_masks(index: int, lines: list[int]) -> np.ndarray:
        masks = [0] * len(lines)
        pos = {x: i for i, x in enumerate(lines)}
        for bit, cell in enumerate(cells):
            masks[pos[cell[index]]] |= 1 << bit
        return np.array(masks, dtype=np.uint64)

    def kept_cells(line_mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        # for each subset X of the lines: cells lying on no line of X, and (-1)^|X|
        kept = np.array([(1 << len(cells)) - 1], dtype=np.uint64)
        sign = np.array([1], dtype=np.int64)
        for m in line_mask:
            kept = np.concatenate([kept, kept & ~m])
            sign = np.concatenate([sign, -sign])
        return kept, sign

    row_kept, row_sign = kept_cells(line_masks(0, rows))
    col_kept, col_sign = kept_cells(line_masks(1, cols))

    # hist[n] = signed number of (S, T) pairs leaving n cells
    hist = np.zeros(len(cells) + 1, dtype=np.int64)
    for start in range(0, len(row_kept), _BLOCK):
        block = row_kept[start:start + _BLOCK, None] & col_kept[None, :]
        signs = row_sign[start:start + _BLOCK, None] * col_sign[None, :]
        hist += _signed_bincount(_popcount(block).ravel(), signs.ravel(), len(cells) + 1)

    values = [
        sum(int(h) * binomial(n, k) for n, h in enumerate(hist) if h)
        for k in range(len(cells) + 1)
    ]
    return RookSequence(board, tuple(values), "dual")


def _signed_bincount(idx: np.ndarray, signs: np.ndarray, length: int) -> np.ndarray:
    pos = np.bincount(idx[signs > 0], minlength=length)
    neg = np.bincount(idx[signs < 0], minlength=length)
    return pos.astype(np.int64) - neg.astype(np.int64)


def dual_polynomial_at_minus_one(board: Board, limit: int | None = None) -> int:
    """``sum_k (-1)^k R~_k`` of the board."""
    values = dual_rook_numbers(board, limit).values
    return sum(v if k % 2 == 0 else -v for k, v in enumerate(values))


def check_fulmek_range(board: Board, limit: int | None = None) -> bool:
    """True iff the dual rook polynomial at -1 is -1, 0 or 1."""
    return dual_polynomial_at_minus_one(board, limit) in (-1, 0, 1)


def check_log_concavity(sequence: RookSequence | Sequence[int]) -> LogConcavityReport:
    """Check ``a_k^2 >= a_(k-1) a_(k+1)`` strictly inside the span of nonzero entries."""
    source = sequence if isinstance(sequence, RookSequence) else None
    values = tuple(sequence.values if source is not None else sequence)
    support = [k for k, v in enumerate(values) if v != 0]
    if support:
        for k in range(support[0] + 1, support[-1]):
            if values[k] ** 2 < values[k - 1] * values[k + 1]:
                return LogConcavityReport(values, False, k, source)
    return LogConcavityReport(values, True, None, source)


def _canonical_skews(max_cells: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # rows are intervals [a, b]; built bottom-up with a and b weakly increasing,
    # the bottom row starting at column 1 and no column gap between neighbours
    found = []

    def grow(rows: list[tuple[int, int]], used: int):
        outer = tuple(b for _, b in reversed(rows))
        inner = tuple(a - 1 for a, _ in reversed(rows))
        found.append((outer, inner))
        a0, b0 = rows[-1]
        for a in range(a0, b0 + 2):
            for b in range(max(a, b0), a + max_cells - used):
                grow(rows + [(a, b)], used + b - a + 1)

    for b in range(1, max_cells + 1):
        grow([(1, b)], b)
    return found


def enumerate_skew_shapes(max_cells: int) -> Iterator[SkewShape]:
    """Every skew Ferrers board with 1 to ``max_cells`` cells, one shape per canonical board.

    Boards equal up to deleting empty rows and columns are identified, and
    each class is represented by the shape with no empty rows or columns.
    Shapes come out ordered by outer partition, then inner partition.
    """
    if max_cells < 1:
        raise DomainError(f"max_cells must be >= 1, got {max_cells}")
    for outer, inner in sorted(_canonical_skews(max_cells)):
        yield SkewShape(outer, inner)
