"""
Counting biregular overpartitions directly
==========================================

An overpartition may overline the first occurrence of each part size.
The (l, m)-biregular ones use no part divisible by l or by m.
"""

from qcong.congruence import gen_function
from qcong.oracle import count_biregular, count_overpartitions, oracle_series, overpartitions

for op in overpartitions(3):
    print(" + ".join(f"{p}'" if bar else str(p) for p, bar in op))
print(count_overpartitions(3))

# parts avoiding 2 and 3 up to 6 are 1 and 5
print([count_biregular(n, (2, 3)) for n in range(10)])

# the counting DP agrees with the eta-quotient generating function
for pair in [(2, 3), (4, 3), (4, 9), (8, 27), (16, 81)]:
    print(pair, oracle_series(pair, 200) == gen_function(pair, 200))
