"""
The sign of the alternating sum
===============================

The alternating sum ``sum_k (-1)^(k-1) t_k`` is always +1 or -1.  The sign
stated in the theorem is ``(-1)^(i_1 + ... + i_n)``; the product step just
before it gives ``(-1)^((i_1 - 1) + ... + (i_n - 1))``.  They agree only when
the number of dimensions is even.
"""

from fullproj import check_identity

for dims in [(2,), (3,), (2, 2), (3, 2), (1, 1, 1), (2, 2, 2), (2, 2, 2, 2)]:
    r = check_identity(dims)
    print(f"{str(dims):14} sum={r.alternating_sum:+d}  stated={r.stated_sign:+d}  "
          f"derived={r.derived_sign:+d}  stated ok={r.matches_stated}")

# One dimension makes the discrepancy concrete: for I_1 = {1, 2} only the
# full set projects onto I_1, so the sum is (-1)^(2-1) * 1 = -1.
