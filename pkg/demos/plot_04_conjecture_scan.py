"""
Scanning skew boards
====================

Every skew Ferrers board up to a given size (identified up to deleting
empty rows and columns) is checked for the {-1, 0, 1} evaluation range and
for log-concavity of its dual rook numbers.  ``fullproj scan`` does the same
from the shell, exiting with status 4 on any violation.
"""

from collections import Counter

from fullproj import board_from_skew, dual_polynomial_at_minus_one, enumerate_skew_shapes, scan_skew_boards

for max_cells in range(1, 9):
    summary = scan_skew_boards(max_cells)
    print(max_cells, summary.boards_scanned, "boards,", len(summary.violations), "violations")

values = Counter(dual_polynomial_at_minus_one(board_from_skew(s)) for s in enumerate_skew_shapes(8))
print("distribution of values at -1:", dict(sorted(values.items())))
