"""Scanning skew Ferrers boards for violations of the dual rook conjectures."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .boards import (
    board_from_skew,
    check_log_concavity,
    dual_rook_numbers,
    enumerate_skew_shapes,
)
from .errors import DomainError

__all__ = ["CHECKS", "ScanSummary", "scan_skew_boards", "thread_count"]

CHECKS = ("fulmek", "logconcave")

THREADS_ENV = "FULLPROJ_THREADS"


@dataclass
class ScanSummary:
    max_cells: int
    checks: tuple[str, ...]
    boards_scanned: int = 0
    violations: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "max_cells": self.max_cells,
            "checks": list(self.checks),
            "boards_scanned": self.boards_scanned,
            "violation_count": len(self.violations),
            "violations": self.violations,
        }


def thread_count() -> int:
    """Worker cap from ``FULLPROJ_THREADS``; 1 when unset."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _check_one(job) -> list[dict]:
    shape, checks, ie_limit = job
    values = dual_rook_numbers(board_from_skew(shape), ie_limit).values
    found = []
    if "fulmek" in checks:
        value = sum(v if k % 2 == 0 else -v for k, v in enumerate(values))
        if value not in (-1, 0, 1):
            found.append({"shape": str(shape), "check": "fulmek", "value": value})
    if "logconcave" in checks:
        report = check_log_concavity(values)
        if not report.is_log_concave:
            found.append({
                "shape": str(shape),
                "check": "logconcave",
                "index": report.first_violation,
                "values": list(report.values),
            })
    return found


def scan_skew_boards(max_cells: int, checks=CHECKS, threads: int | None = None,
                     ie_limit: int | None = None) -> ScanSummary:
    """Run the selected checks on every canonical skew board with at most ``max_cells`` cells.

    Violations are listed in canonical shape order whatever the worker count.
    """
    requested = set(checks)
    if not requested or requested - set(CHECKS):
        raise DomainError(f"checks must be drawn from {CHECKS}, got {sorted(requested)}")
    checks = tuple(c for c in CHECKS if c in requested)
    threads = thread_count() if threads is None else threads
    jobs = [(shape, checks, ie_limit) for shape in enumerate_skew_shapes(max_cells)]
    summary = ScanSummary(max_cells, checks, boards_scanned=len(jobs))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_check_one, jobs, chunksize=64)
            for found in results:
                summary.violations.extend(found)
    else:
        for job in jobs:
            summary.violations.extend(_check_one(job))
    return summary
