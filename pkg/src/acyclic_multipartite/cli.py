"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage error, 3 cyclic input.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import counting
from .codec import decode, encode, from_edge_list, to_dot, to_edge_list, vertex_name
from .core import (
    CodeError,
    CyclicOrientation,
    OrientationError,
    PartitionSpec,
    SpecError,
    drop_empty_parts,
    format_code,
    parse_code,
    parse_spec,
)
from .enumeration import iter_canonical, iter_codes, iter_unique_source, random_code
from .oracle import TooLarge
from .verify import run_verification

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CYCLIC = 0, 1, 2, 3

QUANTITIES = ("A", "B", "C", "labelled", "poly-bernoulli", "smirnov")
FAMILIES = {"all": iter_codes, "canonical": iter_canonical, "unique-source": iter_unique_source}


class UsageError(Exception):
    pass


def _spec_arg(text: str) -> PartitionSpec:
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _normalized(spec: PartitionSpec) -> PartitionSpec:
    reduced, _ = drop_empty_parts(spec)
    if reduced != spec:
        print(f"note: empty parts dropped, using spec {reduced}", file=sys.stderr)
    return reduced


def _show(code, spec: PartitionSpec, dotted: bool) -> str:
    return format_code(code, dotted=dotted or spec.p > 10)


def cmd_count(args) -> int:
    spec, q = args.spec, args.quantity
    if q == "A":
        value = counting.count_A(spec)
    elif q == "B":
        value = counting.count_B(spec)
    elif q == "C":
        if spec.N < 2:
            raise UsageError("C needs at least two vertices")
        value = counting.count_C(spec)
    elif q == "labelled":
        value = counting.count_labelled(spec)
    elif q == "poly-bernoulli":
        if spec.p != 2:
            raise UsageError("poly-bernoulli needs exactly two sizes")
        value = counting.poly_bernoulli(*spec.sizes)
    else:
        value = counting.smirnov_X(spec.sizes)
    if args.json:
        print(json.dumps({"spec": list(spec.sizes), "quantity": q, "count": str(value)}))
    else:
        print(value)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = _normalized(args.spec)
    resume = parse_code(args.resume_from) if args.resume_from is not None else None
    stream = FAMILIES[args.family](spec, resume)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    out = sys.stdout
    for code in stream:
        if args.format == "lines":
            out.write(_show(code, spec, args.dotted) + "\n")
        elif args.format == "json":
            out.write(json.dumps({"spec": list(spec.sizes), "code": _show(code, spec, args.dotted)}) + "\n")
        else:
            out.write(to_dot(decode(spec, code), name="K_" + format_code(code, dotted=False)))
    return EXIT_OK


def cmd_encode(args) -> int:
    text = args.file.read() if args.file is not None else sys.stdin.read()
    o = from_edge_list(text)
    code = encode(o)
    shown = _show(code, o.spec, args.dotted)
    if args.json:
        print(json.dumps({"spec": list(o.spec.sizes), "code": shown}))
    else:
        print(shown)
    return EXIT_OK


def cmd_decode(args) -> int:
    spec = _normalized(args.spec)
    code = parse_code(args.code)
    o = decode(spec, code)
    if args.format == "edges":
        sys.stdout.write(to_edge_list(o))
    elif args.format == "dot":
        sys.stdout.write(to_dot(o))
    else:
        arcs = [[vertex_name(t), vertex_name(h)] for t, h in sorted(o.arcs)]
        print(json.dumps({"spec": list(spec.sizes), "code": _show(code, spec, args.dotted), "arcs": arcs}))
    return EXIT_OK


def cmd_sample(args) -> int:
    spec = _normalized(args.spec)
    for i in range(args.count):
        print(_show(random_code(spec, args.seed + i), spec, args.dotted))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 1 or args.max_p < 1:
        raise UsageError("--max-n and --max-p must be at least 1")
    results = run_verification(args.max_n, args.max_p)
    ok = all(r.passed for r in results)
    if args.json:
        report = {
            "max_n": args.max_n,
            "max_p": args.max_p,
            "passed": ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "cases": r.cases,
                 "failure": r.failure, "notes": r.notes}
                for r in results
            ],
        }
        print(json.dumps(report, indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<14} {r.cases:>7} cases  {r.seconds:6.2f}s")
            for note in r.notes:
                print(f"      {note}")
            if r.failure:
                print(f"      counterexample: {r.failure}")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acyclic-mp",
        description="Acyclic orientations of complete multipartite graphs via source-removal codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact counts")
    p.add_argument("--spec", type=_spec_arg, required=True, help="part sizes, e.g. 2,2,1")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream codes")
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("family", nargs="?", default="all", choices=tuple(FAMILIES))
    p.add_argument("--format", choices=("lines", "json", "dot"), default="lines")
    p.add_argument("--limit", type=int)
    p.add_argument("--resume-from", metavar="CODE",
                   help="start at the smallest code strictly greater than CODE")
    p.add_argument("--dotted", action="store_true", help="print codes as 0.1.0.1")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("encode", help="edge list -> code")
    p.add_argument("file", nargs="?", type=argparse.FileType("r"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--dotted", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="code -> edge list or DOT")
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("code")
    p.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    p.add_argument("--dotted", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("sample", help="uniformly random codes")
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--dotted", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="compare every formula with its brute-force oracle")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-p", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CyclicOrientation as exc:
        print(f"error: cyclic orientation: {exc}", file=sys.stderr)
        return EXIT_CYCLIC
    except (UsageError, SpecError, CodeError, OrientationError, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
