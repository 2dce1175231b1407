"""Oracle-versus-formula sweep shared by the ``verify`` command and the tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from . import counting, oracle
from .codec import decode, encode, longest_path_stats, sinks, sources
from .core import PartitionSpec, code_runs, format_code
from .enumeration import iter_canonical, iter_codes, iter_unique_source

# per-check size limits; the verify bounds are clipped to these
SWEEP_EDGE_LIMIT = 12
ISO_VERTEX_LIMIT = 7
ISO_EDGE_LIMIT = 16
LISTING_LIMIT = 200_000
BIJECTION_VERTEX_LIMIT = 8
STANLEY_VERTEX_LIMIT = 6
SMIRNOV_LETTER_LIMIT = 8

K22_CENSUS = {
    (0, 1, 0, 1): 4,
    (1, 0, 1, 0): 4,
    (0, 1, 1, 0): 2,
    (1, 0, 0, 1): 2,
    (0, 0, 1, 1): 1,
    (1, 1, 0, 0): 1,
}


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failure: str | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None


def _fixed_compositions(n: int, p: int) -> Iterator[tuple[int, ...]]:
    if p == 1:
        yield (n,)
        return
    for first in range(1, n - p + 2):
        for rest in _fixed_compositions(n - first, p - 1):
            yield (first,) + rest


def compositions(max_n: int, max_p: int, min_n: int = 1) -> Iterator[tuple[int, ...]]:
    """Size vectors with positive entries, ordered by total then length then lexicographically."""
    for n in range(min_n, max_n + 1):
        for p in range(1, min(max_p, n) + 1):
            yield from _fixed_compositions(n, p)


def count_vectors(max_total: int, max_p: int) -> Iterator[tuple[int, ...]]:
    """Letter-count vectors with nonnegative entries, 1..max_p letters."""
    for p in range(1, max_p + 1):
        for ks in product(range(max_total + 1), repeat=p):
            if 0 < sum(ks) <= max_total:
                yield ks


def _spec_str(sizes) -> str:
    return "K_{" + ",".join(map(str, sizes)) + "}"


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise AssertionError(message)


def _run(name: str, body: Callable[[CheckResult], None]) -> CheckResult:
    result = CheckResult(name)
    t0 = time.perf_counter()
    try:
        body(result)
    except AssertionError as exc:
        result.failure = str(exc)
    result.seconds = time.perf_counter() - t0
    return result


def check_k22_census(res: CheckResult) -> None:
    summary = oracle.sweep_orientations(PartitionSpec((2, 2)))
    census = dict(oracle.oracle_code_census(PartitionSpec((2, 2))))
    res.cases = 1
    _require((summary.total, summary.acyclic) == (16, 14), f"K_{{2,2}} sweep gave {summary}")
    _require(census == K22_CENSUS, f"K_{{2,2}} census {census}")
    res.notes.append(
        "K_{2,2} census: "
        + ", ".join(f"{format_code(c, False)}:{k}" for c, k in sorted(census.items()))
    )


def check_count_A(res: CheckResult, max_n: int, max_p: int) -> None:
    for sizes in compositions(max_n, max_p):
        spec = PartitionSpec(sizes)
        a = counting.count_A(spec)
        rec = counting.count_A_recursive(sizes)
        listed = sum(1 for _ in iter_codes(spec)) if a <= LISTING_LIMIT else a
        res.cases += 1
        _require(a == rec == listed, f"{_spec_str(sizes)}: A={a} recursion={rec} listed={listed}")


def check_B_and_C(res: CheckResult, max_n: int, max_p: int) -> None:
    for sizes in compositions(max_n, max_p, min_n=2):
        spec = PartitionSpec(sizes)
        b = counting.count_B(spec)
        c = counting.count_C(spec)
        sym = counting.symmetry_order(sizes)
        if counting.count_A(spec) > LISTING_LIMIT:
            continue
        canon = sum(1 for _ in iter_canonical(spec))
        single = sum(1 for _ in iter_unique_source(spec))
        res.cases += 1
        _require(b == canon, f"{_spec_str(sizes)}: B={b} canonical codes={canon}")
        _require(c * sym == single, f"{_spec_str(sizes)}: C*sym={c * sym} unique-source codes={single}")
        if spec.N <= ISO_VERTEX_LIMIT and spec.edge_count <= ISO_EDGE_LIMIT:
            iso = oracle.oracle_isomorphism_classes(spec)
            iso1 = oracle.oracle_isomorphism_classes(spec, unique_source=True)
            _require(b == iso, f"{_spec_str(sizes)}: B={b} oracle classes={iso}")
            _require(c == iso1, f"{_spec_str(sizes)}: C={c} oracle single-source classes={iso1}")


def check_smirnov(res: CheckResult, max_total: int, max_p: int) -> None:
    for ks in count_vectors(max_total, max_p):
        dp = counting.smirnov_X(ks)
        closed = counting.smirnov_X_closed(ks)
        brute = oracle.oracle_smirnov(ks)
        series = oracle.series_coefficient(ks)
        res.cases += 1
        _require(
            dp == closed == brute == series,
            f"X{ks}: dp={dp} closed={closed} brute={brute} series={series}",
        )
        _require((dp > 0) == counting.in_smirnov_support(ks), f"X{ks}: support mismatch")


def check_d_values(res: CheckResult, max_k: int = 12) -> None:
    d = counting.d_value
    for k in range(max_k + 1):
        for r in range(k + 1):
            res.cases += 1
            _require(d(k, r) == counting.d_value_closed(k, r), f"D({k},{r})={d(k, r)}")
            if k < max_k:
                _require(d(k + 1, r + 1) == d(k, r) - d(k, r + 1), f"D shift fails at ({k},{r})")
            if r >= 1:
                conv = sum((-1) ** (m - 1) * d(k - m, r) for m in range(1, k + 1))
                _require(d(k, r + 1) == conv, f"D convolution fails at ({k},{r + 1})")


def check_labelled(res: CheckResult, max_n: int, max_p: int) -> None:
    for sizes in compositions(max_n, max_p):
        spec = PartitionSpec(sizes)
        if spec.edge_count > SWEEP_EDGE_LIMIT:
            continue
        swept = oracle.sweep_orientations(spec).acyclic
        formula = counting.count_labelled(spec)
        res.cases += 1
        _require(swept == formula, f"{_spec_str(sizes)}: sweep={swept} formula={formula}")
        if len(sizes) == 2:
            pb = counting.poly_bernoulli(*sizes)
            _require(pb == formula, f"{_spec_str(sizes)}: poly-Bernoulli={pb} formula={formula}")


def check_stanley(res: CheckResult, max_n: int, max_p: int) -> None:
    for sizes in compositions(min(max_n, STANLEY_VERTEX_LIMIT), max_p):
        st = oracle.stanley_check(sizes)
        formula = counting.count_labelled(sizes)
        res.cases += 1
        _require(st == formula, f"{_spec_str(sizes)}: (-1)^N chi(-1)={st} formula={formula}")


def check_codes(res: CheckResult, max_n: int, max_p: int) -> None:
    """Round trip, acyclicity, one-part sources/sinks and longest paths for every code."""
    for sizes in compositions(min(max_n, BIJECTION_VERTEX_LIMIT), max_p):
        spec = PartitionSpec(sizes)
        min_runs = None
        for code in iter_codes(spec):
            o = decode(spec, code)
            res.cases += 1
            _require(o.is_acyclic(), f"{_spec_str(sizes)} {format_code(code)}: decoded cycle")
            _require(encode(o) == code, f"{_spec_str(sizes)} {format_code(code)}: round trip")
            _require(len({v[0] for v in sources(o)}) == 1, f"{format_code(code)}: sources span parts")
            _require(len({v[0] for v in sinks(o)}) == 1, f"{format_code(code)}: sinks span parts")
            if spec.N <= 7:
                got = longest_path_stats(code)
                want = oracle.oracle_longest_path(o)
                _require(got == want, f"{_spec_str(sizes)} {format_code(code)}: paths {got} vs {want}")
            runs = code_runs(code).run_count
            min_runs = runs if min_runs is None else min(min_runs, runs)
        _require(min_runs == counting.chromatic_number(spec), f"{_spec_str(sizes)}: min runs {min_runs}")


def run_verification(max_n: int, max_p: int) -> list[CheckResult]:
    if max_n < 1 or max_p < 1:
        raise ValueError("verification bounds must be at least 1")
    results = []
    if max_n >= 4 and max_p >= 2:
        results.append(_run("k22-census", check_k22_census))
    results.append(_run("count-A", lambda r: check_count_A(r, max_n, max_p)))
    results.append(_run("count-B-C", lambda r: check_B_and_C(r, max_n, max_p)))
    results.append(
        _run("smirnov", lambda r: check_smirnov(r, min(max_n, SMIRNOV_LETTER_LIMIT), max_p))
    )
    results.append(_run("d-values", check_d_values))
    results.append(_run("labelled", lambda r: check_labelled(r, max_n, max_p)))
    results.append(_run("stanley", lambda r: check_stanley(r, max_n, max_p)))
    results.append(_run("codes", lambda r: check_codes(r, max_n, max_p)))
    return results
