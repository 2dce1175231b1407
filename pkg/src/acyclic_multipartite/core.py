"""Shared data types: part specifications, codes, orientations and run partitions.

A *code* is a plain tuple of ints over ``{0, ..., p-1}``.  Codes are produced
in bulk by the enumerators, so they stay as bare tuples rather than wrapper
objects; :func:`validate_code` checks one against a spec.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Sequence

Code = tuple[int, ...]
Vertex = tuple[int, int]  # (part, occurrence index)
Arc = tuple[Vertex, Vertex]  # (tail, head)


class SpecError(ValueError):
    """Invalid part specification."""


class NegativeSize(SpecError):
    def __init__(self, index: int):
        super().__init__(f"part {index} has negative size")
        self.index = index


class EmptyList(SpecError):
    def __init__(self):
        super().__init__("a spec needs at least one part")


class CodeError(ValueError):
    """A code does not fit the spec it is used with."""


class MultiplicityMismatch(CodeError):
    pass


class EmptyPartPresent(CodeError):
    pass


class OrientationError(ValueError):
    """Arc set is not an orientation of the complete multipartite graph."""


class CyclicOrientation(ValueError):
    """The orientation contains a directed cycle."""


@dataclass(frozen=True)
class PartitionSpec:
    """Sizes ``(n_1, ..., n_p)`` of the parts, in user order."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes:
            raise EmptyList()
        for i, s in enumerate(self.sizes):
            if s < 0:
                raise NegativeSize(i)

    @property
    def p(self) -> int:
        return len(self.sizes)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        n = self.N
        return (n * n - sum(s * s for s in self.sizes)) // 2

    @property
    def has_empty_parts(self) -> bool:
        return 0 in self.sizes

    def vertices(self) -> list[Vertex]:
        return [(i, j) for i, s in enumerate(self.sizes) for j in range(s)]

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


def validate_spec(sizes: Iterable[int]) -> PartitionSpec:
    return PartitionSpec(tuple(sizes))


def parse_spec(text: str) -> PartitionSpec:
    """Parse ``"2,2,1"``."""
    try:
        sizes = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise SpecError(f"cannot parse spec {text!r}") from None
    return validate_spec(sizes)


def as_spec(spec: PartitionSpec | Sequence[int]) -> PartitionSpec:
    if isinstance(spec, PartitionSpec):
        return spec
    return validate_spec(spec)


def drop_empty_parts(spec: PartitionSpec) -> tuple[PartitionSpec, dict[int, int]]:
    """Remove zero-size parts; return the reduced spec and the old->new digit map.

    An all-empty spec keeps a single empty part so the result is still a
    valid spec.
    """
    remap: dict[int, int] = {}
    kept: list[int] = []
    for i, s in enumerate(spec.sizes):
        if s > 0:
            remap[i] = len(kept)
            kept.append(s)
    if not kept:
        return PartitionSpec((0,)), {}
    return PartitionSpec(tuple(kept)), remap


def validate_code(spec: PartitionSpec, digits: Iterable[int]) -> Code:
    code = tuple(int(d) for d in digits)
    if spec.has_empty_parts:
        raise EmptyPartPresent(f"spec {spec} has empty parts; normalize it first")
    counts = Counter(code)
    bad = [d for d in counts if not 0 <= d < spec.p]
    if bad:
        raise MultiplicityMismatch(f"digit {bad[0]} outside 0..{spec.p - 1}")
    for i, s in enumerate(spec.sizes):
        if counts.get(i, 0) != s:
            raise MultiplicityMismatch(
                f"digit {i} occurs {counts.get(i, 0)} times, part size is {s}"
            )
    return code


def parse_code(text: str) -> Code:
    """Accept the dotted form ``0.1.0.1.1`` or the compact form ``01011``."""
    text = text.strip()
    if text in ("", "λ"):
        return ()
    try:
        if "." in text:
            return tuple(int(tok) for tok in text.split("."))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise CodeError(f"cannot parse code {text!r}") from None


def format_code(code: Sequence[int], dotted: bool = True) -> str:
    if not dotted and all(d < 10 for d in code):
        return "".join(map(str, code))
    return ".".join(map(str, code))


@dataclass(frozen=True)
class RunPartition:
    """Maximal runs of equal consecutive digits, as ``(digit, length)`` pairs."""

    runs: tuple[tuple[int, int], ...]

    @property
    def run_count(self) -> int:
        return len(self.runs)

    @property
    def run_lengths(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.runs)

    def to_code(self) -> Code:
        return tuple(d for d, n in self.runs for _ in range(n))


def code_runs(code: Sequence[int]) -> RunPartition:
    return RunPartition(tuple((d, sum(1 for _ in g)) for d, g in groupby(code)))


@dataclass(frozen=True)
class Orientation:
    """A direction on every edge of ``K_{n_1,...,n_p}``.

    ``arcs`` holds one ``(tail, head)`` pair per cross-part vertex pair.
    Construction validates this; acyclicity is not required here.
    """

    spec: PartitionSpec
    arcs: frozenset[Arc]
    _out: dict[Vertex, tuple[Vertex, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        spec = self.spec
        arcs = frozenset(self.arcs)
        object.__setattr__(self, "arcs", arcs)
        out: dict[Vertex, list[Vertex]] = {v: [] for v in spec.vertices()}
        for arc in arcs:
            tail, head = arc
            if tail not in out or head not in out:
                raise OrientationError(f"arc {tail}->{head} uses an unknown vertex")
            if tail[0] == head[0]:
                raise OrientationError(f"arc {tail}->{head} lies inside part {tail[0]}")
            if (head, tail) in arcs:
                raise OrientationError(f"pair {tail},{head} is oriented both ways")
            out[tail].append(head)
        if len(arcs) != spec.edge_count:
            raise OrientationError(
                f"{len(arcs)} edges oriented, K_{{{spec}}} has {spec.edge_count}"
            )
        object.__setattr__(self, "_out", {v: tuple(sorted(h)) for v, h in out.items()})

    @property
    def vertices(self) -> list[Vertex]:
        return self.spec.vertices()

    def successors(self, v: Vertex) -> tuple[Vertex, ...]:
        return self._out[v]

    def in_degrees(self) -> dict[Vertex, int]:
        deg = {v: 0 for v in self._out}
        for heads in self._out.values():
            for h in heads:
                deg[h] += 1
        return deg

    def out_degrees(self) -> dict[Vertex, int]:
        return {v: len(h) for v, h in self._out.items()}

    def is_acyclic(self) -> bool:
        deg = self.in_degrees()
        stack = [v for v, d in deg.items() if d == 0]
        removed = 0
        while stack:
            v = stack.pop()
            removed += 1
            for h in self._out[v]:
                deg[h] -= 1
                if deg[h] == 0:
                    stack.append(h)
        return removed == len(deg)
