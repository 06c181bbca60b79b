import pytest

from fullproj import DomainError, scan_skew_boards
from fullproj.scan import thread_count


def test_scan_small():
    summary = scan_skew_boards(4, ["fulmek"])
    assert summary.boards_scanned == 41 and summary.violations == []
    assert scan_skew_boards(1, ["logconcave"]).boards_scanned == 1


def test_scan_rejects_unknown_checks():
    with pytest.raises(DomainError):
        scan_skew_boards(3, ["fulmek", "nope"])
    with pytest.raises(DomainError):
        scan_skew_boards(3, [])


def test_parallel_scan_matches_sequential():
    seq = scan_skew_boards(6, threads=1).as_dict()
    par = scan_skew_boards(6, threads=3).as_dict()
    assert seq == par


def test_thread_env(monkeypatch):
    monkeypatch.delenv("FULLPROJ_THREADS", raising=False)
    assert thread_count() == 1
    monkeypatch.setenv("FULLPROJ_THREADS", "4")
    assert thread_count() == 4
    monkeypatch.setenv("FULLPROJ_THREADS", "0")
    with pytest.raises(DomainError):
        thread_count()
