"""Reading boards from ASCII grids, JSON documents and ``outer/inner`` skew specs."""
from __future__ import annotations

import json
from pathlib import Path

from .boards import Board, SkewShape, board_from_skew
from .errors import DomainError

__all__ = ["parse_ascii", "parse_json", "parse_skew", "load_board"]


def parse_ascii(text: str) -> Board:
    """Parse a grid of ``#`` (cell) and ``.`` (no cell), top row first.

    Trailing whitespace is ignored; blank lines are allowed only before and after the grid.
    """
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    cells = []
    for r, line in enumerate(lines, start=1):
        if not line:
            raise DomainError(f"blank line {r} inside board grid")
        for c, ch in enumerate(line, start=1):
            if ch == "#":
                cells.append((r, c))
            elif ch != ".":
                raise DomainError(f"unexpected character {ch!r} at row {r}, column {c}")
    return Board.from_cells(cells)


def parse_json(text: str) -> Board:
    """Parse ``{"cells": [[r, c], ...]}`` with 1-based positive integers."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON board: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("cells"), list):
        raise DomainError('a JSON board must be an object with a "cells" list')
    cells = []
    for cell in doc["cells"]:
        if not isinstance(cell, list) or len(cell) != 2:
            raise DomainError(f"a cell is a [row, column] pair, got {cell!r}")
        if any(isinstance(a, bool) or not isinstance(a, int) or a < 1 for a in cell):
            raise DomainError(f"cell coordinates must be positive integers, got {cell!r}")
        cells.append(tuple(cell))
    return Board.from_cells(cells)


def _parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DomainError(f"partition parts must be integers, got {text!r}") from None


def parse_skew(spec: str) -> SkewShape:
    """Parse ``"3,2,1/1,1"``; an empty or missing inner part means a plain Ferrers board."""
    outer, _, inner = spec.partition("/")
    return SkewShape(_parts(outer), _parts(inner))


def load_board(path: str | Path) -> Board:
    """Load a board file, choosing JSON when the content starts with ``{``."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_ascii(text)
