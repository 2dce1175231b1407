"""
Orientations up to isomorphism
==============================

Canonical codes pick one representative per orbit of equal-size part swaps.
An orbit-counting oracle over raw arc sets gives the same numbers.
"""

from acyclic_multipartite import PartitionSpec, counting, oracle
from acyclic_multipartite.core import format_code
from acyclic_multipartite.enumeration import iter_canonical, iter_unique_source

spec = PartitionSpec((2, 2))
print([format_code(c, dotted=False) for c in iter_canonical(spec)])
print(counting.count_B(spec), oracle.oracle_isomorphism_classes(spec))

# single-source codes have distinct first two digits; C counts them up to the swap
print([format_code(c, dotted=False) for c in iter_unique_source(spec)])
print(counting.count_C(spec), oracle.oracle_isomorphism_classes(spec, unique_source=True))

spec = PartitionSpec((2, 2, 1))
print(counting.count_B(spec), oracle.oracle_isomorphism_classes(spec))
