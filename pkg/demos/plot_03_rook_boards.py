"""
Rook and dual rook numbers of skew boards
=========================================

Rook numbers count placements with at most one rook per row and column;
dual rook numbers count placements with at least one.
"""

from fullproj import (
    SkewShape,
    board_from_skew,
    check_log_concavity,
    dual_polynomial_at_minus_one,
    dual_rook_numbers,
    full_board,
    parse_ascii,
    rook_numbers,
)

board = board_from_skew(SkewShape((3, 2, 1), (1, 1)))
print(board.to_ascii())
print("rook numbers      ", rook_numbers(board).as_list())
print("dual rook numbers ", dual_rook_numbers(board).as_list())
print("dual polynomial at -1:", dual_polynomial_at_minus_one(board))

# On a full rectangle the dual rook numbers are the box counts t_k.
print("full 2x3 dual:", dual_rook_numbers(full_board(2, 3)).as_list())

# Boards can also be drawn by hand.  This one is not a skew board and its
# evaluation at -1 falls outside {-1, 0, 1}.
odd = parse_ascii("""
.##
#.#
##.
""")
print("3x3 minus diagonal at -1:", dual_polynomial_at_minus_one(odd))

print(check_log_concavity(dual_rook_numbers(board)).as_dict())
