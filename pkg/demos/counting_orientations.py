"""
Counting acyclic orientations
=============================

Three counts for each spec: codes (A), codes up to swapping equal-size
parts (B), and the single-source ones among those (C).  Labelled orientations
are counted separately and checked against a brute-force sweep.
"""

from acyclic_multipartite import counting, oracle
from acyclic_multipartite.enumeration import iter_codes

for sizes in [(2, 2), (2, 3), (2, 2, 1), (1, 1, 1, 1), (3, 3, 3)]:
    a = counting.count_A(sizes)
    b = counting.count_B(sizes)
    c = counting.count_C(sizes)
    print(f"{sizes}: A={a} B={b} C={c}")

# A is a multinomial coefficient, so the stream of codes has exactly A terms
spec = (3, 2, 2)
from acyclic_multipartite import PartitionSpec
print(sum(1 for _ in iter_codes(PartitionSpec(spec))), counting.count_A(spec))

# labelled counts: the bipartite case gives poly-Bernoulli numbers
for n in range(1, 5):
    print([counting.poly_bernoulli(n, m) for m in range(1, 5)])

# every orientation of K_{2,2,1}, tested one by one
swept = oracle.sweep_orientations((2, 2, 1))
print(swept, counting.count_labelled((2, 2, 1)))

# big inputs are fine, the integers just grow
print(counting.count_labelled((10, 10, 10)))
