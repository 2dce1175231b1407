"""Streaming generation and sampling of codes.

Codes come out in lexicographic order, produced by in-place stepping to the
next multiset permutation (rightmost ascent, swap, reverse suffix).
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .codec import has_unique_source, is_canonical
from .core import Code, PartitionSpec, validate_code


def _first_code(spec: PartitionSpec) -> list[int]:
    return [i for i, s in enumerate(spec.sizes) for _ in range(s)]


def next_code(a: list[int]) -> bool:
    """Advance ``a`` to the next multiset permutation in place.

    Returns False (leaving ``a`` untouched) when ``a`` is already the last one.
    """
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    pivot = a[i]
    j = len(a) - 1
    while a[j] <= pivot:
        j -= 1
    a[i], a[j] = a[j], pivot
    a[i + 1:] = a[:i:-1]
    return True


def _successor_of(spec: PartitionSpec, after: Sequence[int]) -> list[int] | None:
    """Smallest valid code strictly greater than ``after`` (any digit string)."""
    after = list(after)
    n, p = spec.N, spec.p
    # remaining[i] holds the unused multiplicities after the prefix after[:i]
    remaining = [list(spec.sizes)]
    for d in after[:n]:
        left = remaining[-1]
        if not (0 <= d < p and left[d] > 0):
            break
        left = list(left)
        left[d] -= 1
        remaining.append(left)
    longest = len(remaining) - 1
    for i in range(longest, -1, -1):
        left = list(remaining[i])
        if i == len(after):
            if i == n:
                continue
            lower = -1
        elif i == n:
            continue
        else:
            lower = after[i]
        for d in range(max(lower + 1, 0), p):
            if left[d] > 0:
                left[d] -= 1
                return after[:i] + [d] + [k for k in range(p) for _ in range(left[k])]
    return None


def iter_codes(spec: PartitionSpec, resume_from: Sequence[int] | None = None) -> Iterator[Code]:
    """Every code of ``spec`` once, in increasing lexicographic order.

    With ``resume_from``, start at the smallest code strictly greater than it.
    """
    if spec.has_empty_parts:
        validate_code(spec, ())  # raises EmptyPartPresent
    if resume_from is None:
        a = _first_code(spec)
    else:
        a = _successor_of(spec, resume_from)
        if a is None:
            return
    last = len(a) - 1
    yield tuple(a)
    if last < 1:
        return
    # inlined next_code with a shortcut for a final ascent; this is the hot path
    while True:
        x = a[last - 1]
        y = a[last]
        if x < y:
            a[last - 1] = y
            a[last] = x
            yield tuple(a)
            continue
        i = last - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        pivot = a[i]
        j = last
        while a[j] <= pivot:
            j -= 1
        a[i] = a[j]
        a[j] = pivot
        a[i + 1:] = a[:i:-1]
        yield tuple(a)


def iter_canonical(spec: PartitionSpec, resume_from: Sequence[int] | None = None) -> Iterator[Code]:
    """One code per isomorphism class (codes fixed by ``canonicalize``)."""
    if len(set(spec.sizes)) == spec.p:
        yield from iter_codes(spec, resume_from)
        return
    for code in iter_codes(spec, resume_from):
        if is_canonical(spec, code):
            yield code


def iter_unique_source(spec: PartitionSpec, resume_from: Sequence[int] | None = None) -> Iterator[Code]:
    """Codes whose first two digits differ, i.e. orientations with one source."""
    for code in iter_codes(spec, resume_from):
        if has_unique_source(code):
            yield code


def random_code(spec: PartitionSpec, seed: int) -> Code:
    """Uniformly random code, reproducible from ``seed``."""
    if spec.has_empty_parts:
        validate_code(spec, ())
    digits = _first_code(spec)
    random.Random(seed).shuffle(digits)
    return tuple(digits)
