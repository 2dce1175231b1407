"""
Longest directed paths
======================

The longest path of a decoded orientation can be read off the code: one step
per change of digit, and as many such paths as the product of run lengths.
"""

from acyclic_multipartite import PartitionSpec, decode, longest_path_stats
from acyclic_multipartite.oracle import oracle_longest_path
from acyclic_multipartite.enumeration import iter_codes

spec = PartitionSpec((3, 1, 1))
for code in [(0, 0, 0, 1, 2), (0, 2, 0, 1, 0)]:
    print(code, longest_path_stats(code), oracle_longest_path(decode(spec, code)))

# the shortest longest path is one less than the number of parts
best = min(longest_path_stats(c)[0] for c in iter_codes(spec))
print("min longest path:", best)
