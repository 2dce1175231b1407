"""Acyclic orientations of complete multipartite graphs.

Orientations are encoded by the sequence of parts visited while repeatedly
deleting a source.  The package encodes, decodes, enumerates, samples and
counts them, and ships brute-force oracles for every closed-form count.
"""

from .codec import (
    canonicalize,
    decode,
    encode,
    from_edge_list,
    has_unique_source,
    longest_path_stats,
    sinks,
    sources,
    to_dot,
    to_edge_list,
)
from .core import (
    Code,
    CyclicOrientation,
    EmptyList,
    EmptyPartPresent,
    MultiplicityMismatch,
    NegativeSize,
    Orientation,
    PartitionSpec,
    RunPartition,
    code_runs,
    drop_empty_parts,
    format_code,
    parse_code,
    parse_spec,
    validate_code,
    validate_spec,
)
from .counting import (
    binomial,
    chromatic_number,
    count_A,
    count_A_recursive,
    count_B,
    count_C,
    count_labelled,
    d_value,
    multinomial,
    poly_bernoulli,
    smirnov_X,
    smirnov_X_closed,
    stirling2,
)
from .enumeration import iter_canonical, iter_codes, iter_unique_source, random_code

__version__ = "0.1.0"
