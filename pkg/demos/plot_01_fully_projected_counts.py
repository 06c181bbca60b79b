"""
Counting fully-projected subsets
================================

Cells of a box ``I_1 x ... x I_n`` are chosen so that every coordinate
value is hit.  Here we compute the counts with the inclusion-exclusion
formula and check them against brute-force enumeration.
"""

from fullproj import BoxShape, count_sequence, iter_multi_indices
from fullproj.oracle import oracle_histogram
from fullproj.projection import inclusion_exclusion_terms

shape = BoxShape((3, 2))

# The formula is a signed sum over the lattice 0 <= m_j <= i_j.  Each term
# carries a coefficient and the number of cells left after deleting m_j
# values from coordinate j.
for index, (coeff, cells) in zip(iter_multi_indices(shape), inclusion_exclusion_terms(shape)):
    print(tuple(index), coeff, cells)

# The resulting sequence t_1, ..., t_6
seq = count_sequence(shape)
print("t_k for", shape, "=", seq.as_list())

# Brute force visits all 2**6 subsets and bins them by size.
hist, visited = oracle_histogram(shape)
print("oracle  =", hist[1:], "after visiting", visited, "subsets")
assert hist[1:] == seq.as_list()

# Exact integers mean there is no size ceiling on the formula side.
big = count_sequence((3, 3, 3))
print("largest t_k for 3x3x3:", max(big.counts))
