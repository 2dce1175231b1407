"""
Smirnov words
=============

Words with no two equal neighbours, counted by letter multiplicities.  The
same numbers come out of a memoized recursion, an alternating-sum formula,
a brute-force filter and a truncated power series.
"""

from acyclic_multipartite import counting, oracle

for ks in [(2, 2), (2, 3), (4, 2), (2, 2, 2), (3, 2, 1, 1)]:
    print(
        ks,
        counting.smirnov_X(ks),
        counting.smirnov_X_closed(ks),
        oracle.oracle_smirnov(ks),
        oracle.series_coefficient(ks),
    )

# D(k, r): coefficient of z^k in (z - z^2 + z^3 - ...)^r, a signed binomial
for k in range(1, 7):
    print([counting.d_value(k, r) for r in range(1, k + 1)])
