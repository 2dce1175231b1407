"""
Codes and orientations
======================

Peel sources off an acyclic orientation of K_{2,3} and write down the part
each one came from.  The resulting string is the code; decoding it gives the
orientation back.
"""

from acyclic_multipartite import PartitionSpec, decode, encode, sources, sinks
from acyclic_multipartite.codec import to_edge_list, removal_order

spec = PartitionSpec((2, 3))

# a code is any arrangement of two 0s and three 1s
code = (0, 1, 0, 1, 1)
o = decode(spec, code)
print(to_edge_list(o))

# the sources all sit in one part, and so do the sinks
print("sources:", sorted(sources(o)))
print("sinks:  ", sorted(sinks(o)))

# peeling order, then back to the code
print("removal order:", removal_order(o))
assert encode(o) == code

# ties between simultaneous sources never change the code
import random
rng = random.Random(7)
print([encode(o, rng) for _ in range(4)])
