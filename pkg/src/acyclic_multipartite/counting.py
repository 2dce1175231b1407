"""Exact counts over Python integers.

``count_A``  acyclic orientations with fixed parts and unlabelled vertices
``count_B``  the same up to isomorphism
``count_C``  isomorphism classes with a unique source (directed spanning tree)
``count_labelled``  acyclic orientations with labelled vertices
``smirnov_X``  words with prescribed letter counts and no equal neighbours
"""

from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from .core import PartitionSpec, as_spec, drop_empty_parts

__all__ = [
    "NonExactDivision",
    "factorial",
    "binomial",
    "multinomial",
    "stirling2",
    "count_A",
    "count_A_recursive",
    "symmetry_order",
    "count_B",
    "count_C",
    "smirnov_X",
    "smirnov_X_first",
    "smirnov_X_closed",
    "in_smirnov_support",
    "d_value",
    "d_value_closed",
    "poly_bernoulli",
    "count_labelled",
    "chromatic_number",
]


class NonExactDivision(ArithmeticError):
    pass


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    total = 0
    result = 1
    for k in parts:
        total += k
        result *= comb(total, k)
    return result


_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Set partitions of an n-set into k blocks, from S(n+1,k) = k S(n,k) + S(n,k-1)."""
    if n < 0 or k < 0 or k > n:
        return 0
    rows = _stirling_rows
    if n >= len(rows):
        with _stirling_lock:
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows)
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
                rows.append(row)
    return rows[n][k]


def _sizes(spec) -> tuple[int, ...]:
    return as_spec(spec).sizes


def count_A(spec: PartitionSpec | Sequence[int]) -> int:
    return multinomial(_sizes(spec))


def count_A_recursive(sizes: Sequence[int]) -> int:
    """Source-removal recursion; takes raw sizes so that -1 entries are allowed."""
    return _a_rec(tuple(sorted(sizes)))


@lru_cache(maxsize=None)
def _a_rec(sizes: tuple[int, ...]) -> int:
    if any(s < 0 for s in sizes):
        return 0
    if not any(sizes):
        return 1
    total = 0
    for i, s in enumerate(sizes):
        if s > 0:
            total += _a_rec(tuple(sorted(sizes[:i] + (s - 1,) + sizes[i + 1:])))
    return total


def symmetry_order(sizes: Sequence[int]) -> int:
    return prod(factorial(r) for r in Counter(sizes).values())


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonExactDivision(f"{num} / {den} leaves remainder {r}")
    return q


def count_B(spec: PartitionSpec | Sequence[int]) -> int:
    sizes = drop_empty_parts(as_spec(spec))[0].sizes
    return _exact_div(multinomial(sizes), symmetry_order(sizes))


def count_C(spec: PartitionSpec | Sequence[int]) -> int:
    sizes = drop_empty_parts(as_spec(spec))[0].sizes
    n = sum(sizes)
    if n < 2:
        raise ValueError("count_C needs at least two vertices")
    b = count_B(sizes)
    return _exact_div(b * (n * n - sum(s * s for s in sizes)), n * (n - 1))


# -- Smirnov words ----------------------------------------------------------

def in_smirnov_support(counts: Sequence[int]) -> bool:
    """True iff some word realizes ``counts`` (max count <= (1 + total) / 2)."""
    counts = [k for k in counts if k > 0]
    if not counts:
        return False
    return 2 * max(counts) <= 1 + sum(counts)


@lru_cache(maxsize=None)
def _x_first(first: int, others: tuple[int, ...]) -> int:
    """Words starting with the letter whose count is ``first``; ``others`` sorted.

    X^(j)(k) = sum_i X^(i)(k - e_j) - X^(j)(k - e_j) + [k == e_j]
    """
    if first <= 0:
        return 0
    if first == 1 and not any(others):
        return 1
    # after dropping the leading letter, the next letter is one of ``others``
    total = 0
    for i, k in enumerate(others):
        if k > 0 and (i == 0 or others[i - 1] != k):
            rest = others[:i] + (first - 1,) + others[i + 1:]
            mult = others.count(k)
            total += mult * _x_first(k, tuple(sorted(x for x in rest if x)))
    return total


def smirnov_X_first(counts: Sequence[int], j: int) -> int:
    """Words with letter counts ``counts`` that start with letter ``j``."""
    if any(k < 0 for k in counts):
        return 0
    others = tuple(sorted(k for i, k in enumerate(counts) if i != j and k > 0))
    return _x_first(counts[j], others)


def smirnov_X(counts: Sequence[int]) -> int:
    if any(k < 0 for k in counts):
        return 0
    counts = [k for k in counts if k > 0]
    return sum(smirnov_X_first(counts, j) for j in range(len(counts)))


def smirnov_X_closed(counts: Sequence[int]) -> int:
    """Alternating binomial sum for X over the positive entries of ``counts``."""
    ks = [k for k in counts if k > 0]
    if not ks:
        return 0
    if len(ks) == 1:
        return 1 if ks[0] == 1 else 0
    total = 0
    for rs in product(*(range(1, k + 1) for k in ks)):
        term = multinomial(rs)
        for k, r in zip(ks, rs):
            term *= comb(k - 1, r - 1)
        total += -term if sum(rs) % 2 else term
    return -total if sum(ks) % 2 else total


# -- D(k, r): coefficient of z^k in (z - z^2 + z^3 - ...)^r -------------------

@lru_cache(maxsize=None)
def d_value(k: int, r: int) -> int:
    """D(k, r) from the boundary values and D(k, r+1) = sum_m (-1)^(m-1) D(k-m, r)."""
    if k < 0 or r < 0:
        return 0
    if r == 0:
        return 1 if k == 0 else 0
    if k < r:
        return 0
    if r == 1:
        return 1 if k % 2 else -1
    if k == r:
        return 1
    return sum(
        (1 if m % 2 else -1) * d_value(k - m, r - 1) for m in range(1, k - r + 2)
    )


def d_value_closed(k: int, r: int) -> int:
    if k == r == 0:
        return 1
    if r <= 0 or k < r:
        return 0
    sign = -1 if (k + r) % 2 else 1
    return sign * comb(k - 1, k - r)


# -- labelled counts --------------------------------------------------------

def poly_bernoulli(n1: int, n2: int) -> int:
    if n1 < 0 or n2 < 0:
        raise ValueError("poly_bernoulli needs nonnegative arguments")
    return sum(
        factorial(m) ** 2 * stirling2(n1 + 1, m + 1) * stirling2(n2 + 1, m + 1)
        for m in range(min(n1, n2) + 1)
    )


def count_labelled(spec: PartitionSpec | Sequence[int]) -> int:
    """Acyclic orientations of ``K_{n_1,...,n_p}`` with labelled vertices.

    Sum over block counts k_i of prod(k_i! S(n_i, k_i)) * X(k_1, ..., k_p).
    """
    sizes = drop_empty_parts(as_spec(spec))[0].sizes
    if sum(sizes) == 0:
        return 1
    weights = [
        [(k, factorial(k) * stirling2(n, k)) for k in range(1, n + 1)] for n in sizes
    ]
    total = 0
    for choice in product(*weights):
        x = smirnov_X([k for k, _ in choice])
        if x:
            total += x * prod(w for _, w in choice)
    return total


def chromatic_number(spec: PartitionSpec | Sequence[int]) -> int:
    """Number of nonempty parts; also the minimum run count over all codes."""
    spec, _ = drop_empty_parts(as_spec(spec))
    return spec.p if spec.N else 0
