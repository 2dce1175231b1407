"""Brute-force ground truth for the closed formulas.

Nothing here goes through the code-based machinery except where a check
explicitly compares against it (:func:`oracle_code_census` calls
:func:`~acyclic_multipartite.codec.encode` on every swept orientation).
Everything is exponential and guarded by size limits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

from .codec import encode
from .core import (
    Code,
    CyclicOrientation,
    Orientation,
    PartitionSpec,
    Vertex,
    as_spec,
    drop_empty_parts,
)

MAX_EDGES = 24
MAX_ISO_VERTICES = 7
MAX_SMIRNOV_LETTERS = 10
MAX_STANLEY_VERTICES = 7


class TooLarge(ValueError):
    pass


class NonIntegerInterpolation(AssertionError):
    pass


# -- orientation sweep --------------------------------------------------------

def edge_order(spec: PartitionSpec) -> list[tuple[Vertex, Vertex]]:
    """Undirected edges as sorted ``(u, v)`` pairs with ``u < v``.

    Bit ``b`` of a sweep mask is 0 when edge ``b`` points ``u -> v``.
    """
    verts = spec.vertices()
    return [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:] if u[0] != v[0]]


def mask_arcs(edges: Sequence[tuple[Vertex, Vertex]], mask: int) -> list[tuple[Vertex, Vertex]]:
    return [(v, u) if mask >> b & 1 else (u, v) for b, (u, v) in enumerate(edges)]


class _Sweeper:
    """Bit-level view of ``K_{n_1..n_p}`` used for fast acyclicity tests."""

    def __init__(self, spec: PartitionSpec):
        m = spec.edge_count
        if m > MAX_EDGES:
            raise TooLarge(f"{m} edges exceeds the sweep limit of {MAX_EDGES}")
        self.spec = spec
        self.verts = spec.vertices()
        index = {v: i for i, v in enumerate(self.verts)}
        self.edges = edge_order(spec)
        self.pairs = [(index[u], index[v]) for u, v in self.edges]
        self.n = len(self.verts)
        self.m = m

    def in_masks(self, mask: int) -> list[int]:
        inc = [0] * self.n
        for b, (u, v) in enumerate(self.pairs):
            if mask >> b & 1:
                inc[u] |= 1 << v
            else:
                inc[v] |= 1 << u
        return inc

    def peel(self, mask: int) -> list[int] | None:
        """Vertex indices in source-removal order (lowest index first), or None if cyclic."""
        inc = self.in_masks(mask)
        remaining = (1 << self.n) - 1
        order = []
        while remaining:
            for v in range(self.n):
                if remaining >> v & 1 and not inc[v] & remaining:
                    break
            else:
                return None
            remaining &= ~(1 << v)
            order.append(v)
        return order

    def orientation(self, mask: int) -> Orientation:
        return Orientation(self.spec, frozenset(mask_arcs(self.edges, mask)))


@dataclass(frozen=True)
class SweepSummary:
    total: int
    acyclic: int


def sweep_orientations(
    spec: PartitionSpec | Sequence[int],
    visitor: Callable[[Orientation, bool], None] | None = None,
) -> SweepSummary:
    """Visit all ``2**m`` orientations; cycle test by repeated source peeling."""
    sw = _Sweeper(as_spec(spec))
    acyclic = 0
    for mask in range(1 << sw.m):
        ok = sw.peel(mask) is not None
        acyclic += ok
        if visitor is not None:
            visitor(sw.orientation(mask), ok)
    return SweepSummary(1 << sw.m, acyclic)


def peel_code(spec: PartitionSpec, mask: int) -> Code | None:
    """Part sequence of the source-peeling order, computed without the codec."""
    sw = _Sweeper(spec)
    order = sw.peel(mask)
    return None if order is None else tuple(sw.verts[v][0] for v in order)


def oracle_code_census(spec: PartitionSpec | Sequence[int]) -> Counter:
    """Code -> number of labelled acyclic orientations carrying it."""
    spec = as_spec(spec)
    sw = _Sweeper(spec)
    census: Counter = Counter()
    for mask in range(1 << sw.m):
        if sw.peel(mask) is not None:
            census[encode(sw.orientation(mask))] += 1
    return census


# -- isomorphism classes ------------------------------------------------------

def _symmetry_group(spec: PartitionSpec) -> list[list[int]]:
    """Vertex-index permutations: equal-size part swaps composed with in-part shuffles."""
    verts = spec.vertices()
    index = {v: i for i, v in enumerate(verts)}
    part_maps = [
        sigma
        for sigma in permutations(range(spec.p))
        if all(spec.sizes[i] == spec.sizes[sigma[i]] for i in range(spec.p))
    ]
    inner = [list(permutations(range(s))) for s in spec.sizes]
    group = []
    for sigma in part_maps:
        for shuffles in product(*inner):
            group.append([index[(sigma[i], shuffles[i][j])] for i, j in verts])
    return group


def oracle_isomorphism_classes(
    spec: PartitionSpec | Sequence[int], unique_source: bool = False
) -> int:
    """Number of orbits of labelled acyclic orientations under the part symmetries.

    Part order does not change the orbit count, so sizes are sorted first.
    With ``unique_source`` only orientations with exactly one source are counted.
    """
    spec = drop_empty_parts(as_spec(spec))[0]
    if spec.N > MAX_ISO_VERTICES:
        raise TooLarge(f"{spec.N} vertices exceeds the isomorphism limit")
    return _orbit_count(tuple(sorted(spec.sizes)), unique_source)


@lru_cache(maxsize=None)
def _orbit_count(sizes: tuple[int, ...], unique_source: bool) -> int:
    spec = PartitionSpec(sizes)
    sw = _Sweeper(spec)
    pos = {pair: b for b, pair in enumerate(sw.pairs)}
    actions = []
    for perm in _symmetry_group(spec):
        act = []
        for u, v in sw.pairs:
            pu, pv = perm[u], perm[v]
            act.append((pos[(pu, pv)], 0) if pu < pv else (pos[(pv, pu)], 1))
        actions.append(act)

    pool = set()
    for mask in range(1 << sw.m):
        if sw.peel(mask) is None:
            continue
        if unique_source and sw.in_masks(mask).count(0) != 1:
            continue
        pool.add(mask)

    classes = 0
    while pool:
        mask = pool.pop()
        classes += 1
        for act in actions:
            image = 0
            for b, (target, flip) in enumerate(act):
                if (mask >> b & 1) ^ flip:
                    image |= 1 << target
            pool.discard(image)
    return classes


# -- Smirnov words ------------------------------------------------------------

def _arrangements(counts: list[int], prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if not any(counts):
        yield tuple(prefix)
        return
    for letter, k in enumerate(counts):
        if k:
            counts[letter] -= 1
            prefix.append(letter)
            yield from _arrangements(counts, prefix)
            prefix.pop()
            counts[letter] += 1


def oracle_smirnov(counts: Sequence[int]) -> int:
    """Count distinct arrangements with no two equal neighbours by listing them all."""
    counts = list(counts)
    if any(k < 0 for k in counts):
        return 0
    if sum(counts) > MAX_SMIRNOV_LETTERS:
        raise TooLarge("too many letters for exhaustive listing")
    if sum(counts) == 0:
        return 0
    return sum(
        1
        for word in _arrangements(counts, [])
        if all(a != b for a, b in zip(word, word[1:]))
    )


class TruncatedSeries:
    """Multivariate polynomial with integer coefficients, truncated at per-variable caps."""

    def __init__(self, caps: Sequence[int], coeffs: dict[tuple[int, ...], int] | None = None):
        self.caps = tuple(caps)
        self.coeffs: dict[tuple[int, ...], int] = {}
        for exps, c in (coeffs or {}).items():
            if c and self._fits(exps):
                self.coeffs[tuple(exps)] = c

    def _fits(self, exps) -> bool:
        return all(e <= cap for e, cap in zip(exps, self.caps))

    @classmethod
    def zero(cls, caps):
        return cls(caps)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.caps, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        caps = self.caps
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(x <= cap for x, cap in zip(e, caps)):
                    out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries(caps, out)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def __repr__(self):
        return f"TruncatedSeries(caps={self.caps}, terms={len(self.coeffs)})"


def alternating_variable(caps: Sequence[int], i: int) -> TruncatedSeries:
    """x_i - x_i^2 + x_i^3 - ... truncated at ``caps[i]``: the expansion of x/(1+x)."""
    coeffs = {}
    for m in range(1, caps[i] + 1):
        e = [0] * len(caps)
        e[i] = m
        coeffs[tuple(e)] = 1 if m % 2 else -1
    return TruncatedSeries(caps, coeffs)


def series_coefficient(counts: Sequence[int]) -> int:
    """Coefficient of x^counts in sum_{n>=1} (sum_i x_i/(1+x_i))^n, truncated."""
    caps = tuple(counts)
    if any(k < 0 for k in caps):
        return 0
    total_deg = sum(caps)
    if total_deg > MAX_SMIRNOV_LETTERS:
        raise TooLarge("series truncation too large")
    g = TruncatedSeries.zero(caps)
    for i in range(len(caps)):
        g = g + alternating_variable(caps, i)
    acc = TruncatedSeries.zero(caps)
    power = g
    for _ in range(total_deg):
        acc = acc + power
        power = power * g
    return acc.coefficient(caps)


# -- longest paths ------------------------------------------------------------

def oracle_longest_path(o: Orientation) -> tuple[int, int]:
    """(length in edges, number of paths of that length) via topological DP."""
    deg = o.in_degrees()
    queue = [v for v in sorted(deg) if deg[v] == 0]
    topo = []
    while queue:
        v = queue.pop()
        topo.append(v)
        for h in o.successors(v):
            deg[h] -= 1
            if deg[h] == 0:
                queue.append(h)
    if len(topo) != len(deg):
        raise CyclicOrientation("orientation has a directed cycle")
    best = {v: 0 for v in topo}
    ways = {v: 1 for v in topo}
    for v in topo:
        for h in o.successors(v):
            if best[v] + 1 > best[h]:
                best[h] = best[v] + 1
                ways[h] = ways[v]
            elif best[v] + 1 == best[h]:
                ways[h] += ways[v]
    if not topo:
        return 0, 0
    length = max(best.values())
    return length, sum(ways[v] for v in topo if best[v] == length)


# -- chromatic polynomial -----------------------------------------------------

def count_colorings(spec: PartitionSpec, colors: int) -> int:
    """Proper colourings of ``K_{n_1..n_p}`` with ``colors`` colours, by backtracking."""
    verts = spec.vertices()
    earlier = [[j for j in range(i) if verts[j][0] != verts[i][0]] for i in range(len(verts))]
    assign = [0] * len(verts)

    def extend(i: int) -> int:
        if i == len(verts):
            return 1
        total = 0
        for c in range(colors):
            if all(assign[j] != c for j in earlier[i]):
                assign[i] = c
                total += extend(i + 1)
        return total

    return extend(0)


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Monomial coefficients (lowest degree first) through the points, by divided differences."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # prod_{i<level} (x - xs[i])
    for level, a in enumerate(newton):
        for d, b in enumerate(basis):
            coeffs[d] += a * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d + 1] += b
            nxt[d] -= xs[level] * b
        basis = nxt
    return coeffs


def chromatic_polynomial(spec: PartitionSpec | Sequence[int]) -> list[int]:
    spec = as_spec(spec)
    if spec.N > MAX_STANLEY_VERTICES:
        raise TooLarge(f"{spec.N} vertices exceeds the colouring limit")
    xs = list(range(spec.N + 1))
    coeffs = interpolate(xs, [count_colorings(spec, x) for x in xs])
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegerInterpolation(f"non-integer chromatic coefficients {coeffs}")
    return [int(c) for c in coeffs]


def stanley_check(spec: PartitionSpec | Sequence[int]) -> int:
    """(-1)^N chi(-1): the number of acyclic orientations, via proper colourings."""
    spec = as_spec(spec)
    coeffs = chromatic_polynomial(spec)
    at_minus_one = sum(c * (-1) ** d for d, c in enumerate(coeffs))
    return (-1) ** spec.N * at_minus_one
