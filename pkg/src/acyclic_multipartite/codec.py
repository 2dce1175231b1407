"""Source-removal encoding of acyclic orientations and its inverse.

Repeatedly deleting a source and writing down its part turns an acyclic
orientation of ``K_{n_1,...,n_p}`` into a string with ``n_i`` copies of digit
``i``.  All simultaneous sources lie in one part, so the string does not
depend on which source is deleted first, and every such string arises from
exactly one orientation (up to relabelling vertices inside a part).
"""

from __future__ import annotations

import heapq
import random
import re
from math import prod
from string import ascii_lowercase
from typing import Sequence

from .core import (
    Code,
    CyclicOrientation,
    Orientation,
    OrientationError,
    PartitionSpec,
    Vertex,
    code_runs,
    parse_spec,
    validate_code,
)


def decode(spec: PartitionSpec, code: Sequence[int]) -> Orientation:
    """Build the orientation whose source-removal sequence is ``code``.

    The j-th occurrence of digit ``i`` becomes vertex ``(i, j)``; every
    cross-part edge points from the earlier position to the later one.
    """
    code = validate_code(spec, code)
    seen = [0] * spec.p
    order: list[Vertex] = []
    for d in code:
        order.append((d, seen[d]))
        seen[d] += 1
    arcs = {
        (u, v)
        for j, u in enumerate(order)
        for v in order[j + 1:]
        if u[0] != v[0]
    }
    return Orientation(spec, frozenset(arcs))


def removal_order(o: Orientation, rng: random.Random | None = None) -> list[Vertex]:
    """Vertices in the order they are peeled off as sources.

    Ties go to the smallest ``(part, index)`` unless ``rng`` is given, in
    which case a random current source is taken.
    """
    deg = o.in_degrees()
    ready = [v for v, d in deg.items() if d == 0]
    heapq.heapify(ready)
    order: list[Vertex] = []
    while ready:
        if rng is None:
            v = heapq.heappop(ready)
        else:
            v = ready.pop(rng.randrange(len(ready)))
        order.append(v)
        for h in o.successors(v):
            deg[h] -= 1
            if deg[h] == 0:
                if rng is None:
                    heapq.heappush(ready, h)
                else:
                    ready.append(h)
    if len(order) != len(deg):
        raise CyclicOrientation(
            f"no source left with {len(deg) - len(order)} vertices remaining"
        )
    return order


def encode(o: Orientation, rng: random.Random | None = None) -> Code:
    return tuple(v[0] for v in removal_order(o, rng))


def canonicalize(spec: PartitionSpec, code: Sequence[int]) -> Code:
    """Representative of ``code`` under swapping digits of equal-size parts.

    Inside every class of equal-size parts, digits are renamed by order of
    first appearance, smallest first.
    """
    classes: dict[int, list[int]] = {}
    for i, s in enumerate(spec.sizes):
        classes.setdefault(s, []).append(i)
    pending = {s: iter(digits) for s, digits in classes.items()}
    rename: dict[int, int] = {}
    for d in code:
        if d not in rename:
            rename[d] = next(pending[spec.sizes[d]])
            if len(rename) == spec.p:
                break
    return tuple(rename[d] for d in code)


def is_canonical(spec: PartitionSpec, code: Sequence[int]) -> bool:
    return canonicalize(spec, code) == tuple(code)


def sources(o: Orientation) -> set[Vertex]:
    return {v for v, d in o.in_degrees().items() if d == 0}


def sinks(o: Orientation) -> set[Vertex]:
    return {v for v, d in o.out_degrees().items() if d == 0}


def has_unique_source(code: Sequence[int]) -> bool:
    return len(code) == 1 or code[0] != code[1]


def longest_path_stats(code: Sequence[int]) -> tuple[int, int]:
    """(length, number) of the longest directed paths in ``decode(code)``.

    One vertex per run, so the length is ``runs - 1`` and the count is the
    product of the run lengths.
    """
    runs = code_runs(code)
    return runs.run_count - 1, prod(runs.run_lengths)


# -- text formats ---------------------------------------------------------

def vertex_name(v: Vertex) -> str:
    if v[0] >= len(ascii_lowercase):
        raise ValueError("edge-list names support at most 26 parts")
    return f"{ascii_lowercase[v[0]]}{v[1]}"


_VERTEX_RE = re.compile(r"^([a-z])(\d+)$")
_ARC_RE = re.compile(r"^\s*(\S+)\s*->\s*(\S+)\s*$")


def parse_vertex(token: str) -> Vertex:
    m = _VERTEX_RE.match(token)
    if not m:
        raise OrientationError(f"bad vertex name {token!r}")
    return ascii_lowercase.index(m.group(1)), int(m.group(2))


def to_edge_list(o: Orientation) -> str:
    lines = [f"parts: {o.spec}"]
    lines += [f"{vertex_name(t)} -> {vertex_name(h)}" for t, h in sorted(o.arcs)]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Orientation:
    """Parse the ``parts: n1,n2,...`` header followed by ``a0 -> b1`` lines."""
    spec = None
    arcs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if spec is None:
            if not line.startswith("parts:"):
                raise OrientationError("edge list must start with 'parts: n1,n2,...'")
            spec = parse_spec(line[len("parts:"):])
            continue
        m = _ARC_RE.match(line)
        if not m:
            raise OrientationError(f"bad arc line {raw!r}")
        arcs.append((parse_vertex(m.group(1)), parse_vertex(m.group(2))))
    if spec is None:
        raise OrientationError("empty edge list")
    return Orientation(spec, frozenset(arcs))


def to_dot(o: Orientation, name: str = "K") -> str:
    lines = [f"digraph {name} {{"]
    for i in range(o.spec.p):
        members = " ".join(vertex_name((i, j)) for j in range(o.spec.sizes[i]))
        lines.append(f"  subgraph cluster_{i} {{ label=\"part {i}\"; {members}; }}")
    lines += [f"  {vertex_name(t)} -> {vertex_name(h)};" for t, h in sorted(o.arcs)]
    lines.append("}")
    return "\n".join(lines) + "\n"

