"""Exact counting of fully-projected subsets of a box, with rook and dual rook numbers of boards."""

__version__ = "0.1.0"

from .boardio import load_board, parse_ascii, parse_json, parse_skew
from .boards import (
    Board,
    LogConcavityReport,
    RookSequence,
    SkewShape,
    board_from_skew,
    check_fulmek_range,
    check_log_concavity,
    dual_polynomial_at_minus_one,
    dual_rook_numbers,
    enumerate_skew_shapes,
    full_board,
    rook_numbers,
)
from .errors import DomainError, FullprojError, LimitExceededError
from .multiindex import (
    BoxShape,
    MultiIndex,
    binomial,
    iter_multi_indices,
    iter_strict_multi_indices,
)
from .oracle import (
    is_fully_projected,
    oracle_count,
    oracle_dual_rook,
    oracle_rook,
    subset_mask,
)
from .projection import (
    CountSequence,
    IdentityReport,
    alternating_sum,
    check_identity,
    count_fully_projected,
    count_sequence,
)
from .scan import ScanSummary, scan_skew_boards
