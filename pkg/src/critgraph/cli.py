"""Command-line surface: generate / check / certify / partition / canon /
filter-critical over graph6 streams.

graph6 on stdin/stdout is the universal pipe format; corpus manifests are
sidecar files. Exit codes: 0 success or all lines pass, 1 a check failed or
a line was malformed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Optional, TextIO

from . import __version__
from .canon import canonical_form
from .certify import CriticalDatabase, certify_k_colorability
from .corpus import write_corpus
from .criticality import is_k_critical_family, is_k_vertex_critical
from .detect import find_induced_antihole, find_induced_c5, induced_c5_orderings
from .generate import ConfigError, GenConfig, default_family, generate_all
from .graph6 import Graph6Error, decode, encode
from .graphs import Graph, GraphError, bits, named_graph
from .structure import (
    ClassViolation,
    partition_around_antihole,
    partition_around_c5,
    verify_antihole_claims,
    verify_c5_properties,
)

_FAMILY_ALIASES = {
    "p5": "path 5",
    "dart": "dart",
    "diamond": "diamond",
}


def _parse_family(spec: str) -> tuple[Graph, ...]:
    out = []
    for token in spec.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token in _FAMILY_ALIASES:
            out.append(named_graph(_FAMILY_ALIASES[token]))
        elif token[0] in "pck" and token[1:].isdigit():
            kind = {"p": "path", "c": "cycle", "k": "complete"}[token[0]]
            out.append(named_graph(f"{kind} {token[1:]}"))
        else:
            raise ConfigError(f"unknown family member {token!r}")
    if not out:
        raise ConfigError("empty family")
    return tuple(out)


def _stream(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    return open(path)


def _graphs(path: Optional[str]) -> Iterator[tuple[str, Optional[Graph], Optional[str]]]:
    """Yield (line, graph or None, error or None) per nonempty input line."""
    with _stream(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            try:
                yield line, decode(line), None
            except (Graph6Error, GraphError) as exc:
                yield line, None, str(exc)


def _cmd_generate(args) -> int:
    family = _parse_family(args.family)
    seeds = None
    if args.seeds != "auto":
        seeds = []
        for fname in args.seeds.split(","):
            with open(fname) as fh:
                for raw in fh:
                    line = raw.strip()
                    if line:
                        seeds.append(decode(line))
        seeds = tuple(seeds)
    cfg = GenConfig(
        k=args.k,
        family=family,
        max_order=args.max_order,
        seeds=seeds,
        jobs=args.jobs,
    )
    result = generate_all(cfg)
    if args.out:
        write_corpus(result, cfg, args.out)
    else:
        for key in result.sorted_keys():
            sys.stdout.write(key.decode("ascii") + "\n")
    print(f"k={cfg.k} total={result.total} truncated={result.truncated}", file=sys.stderr)
    print("order count", file=sys.stderr)
    for order in sorted(result.counts_by_order):
        print(f"{order:5d} {result.counts_by_order[order]}", file=sys.stderr)
    print(
        f"nodes={result.stats['nodes']} cache_hits={result.stats['cache_hits']}",
        file=sys.stderr,
    )
    return 0 if not result.truncated else 1


def _cmd_check(args) -> int:
    family = default_family()
    ok = True
    for line, g, err in _graphs(args.input):
        if g is None:
            print(f"{line} ERROR {err}")
            ok = False
            continue
        if args.mode == "vertex":
            passed, witness = is_k_vertex_critical(g, args.k)
        else:
            try:
                passed, witness = is_k_critical_family(g, args.k, family)
            except GraphError as exc:
                print(f"{line} ERROR {exc}")
                ok = False
                continue
        if passed:
            print(f"{line} OK")
        else:
            print(f"{line} FAIL {witness}")
            ok = False
    return 0 if ok else 1


def _cmd_canon(args) -> int:
    ok = True
    for line, g, err in _graphs(args.input):
        if g is None:
            print(f"{line} ERROR {err}")
            ok = False
            continue
        print(canonical_form(g).decode("ascii"))
    return 0 if ok else 1


def _cmd_partition(args) -> int:
    ok = True
    for line, g, err in _graphs(args.input):
        if g is None:
            print(f"{line} ERROR {err}")
            ok = False
            continue
        try:
            if args.hole == "c5":
                mask = find_induced_c5(g)
                if mask is None:
                    print(f"{line} SKIP no-induced-c5")
                    continue
                order = next(iter(induced_c5_orderings(g)))
                report = verify_c5_properties(g, partition_around_c5(g, order))
            else:
                order = None
                for m in range(7, g.n + 1, 2):
                    order = find_induced_antihole(g, m)
                    if order is not None:
                        break
                if order is None:
                    print(f"{line} SKIP no-induced-antihole")
                    continue
                report = verify_antihole_claims(
                    g, partition_around_antihole(g, order), connected=g.is_connected()
                )
        except ClassViolation as exc:
            print(f"{line} FAIL {exc}")
            ok = False
            continue
        if report.all_hold:
            print(f"{line} OK")
        else:
            lines = "; ".join(c.line() for c in report.violations())
            print(f"{line} FAIL {lines}")
            ok = False
    return 0 if ok else 1


def _cmd_certify(args) -> int:
    db = CriticalDatabase.load(args.db)
    ok = True
    for line, g, err in _graphs(args.input):
        if g is None:
            print(f"{line} ERROR {err}")
            ok = False
            continue
        try:
            _, cert = certify_k_colorability(g, args.k, db)
        except (GraphError, ValueError) as exc:
            print(f"{line} ERROR {exc}")
            ok = False
            continue
        print(f"{line} {cert.serialize()}")
    return 0 if ok else 1


def _cmd_filter_critical(args) -> int:
    family = default_family()
    ok = True
    kept = 0
    for line, g, err in _graphs(args.input):
        if g is None:
            print(f"{line} ERROR {err}", file=sys.stderr)
            ok = False
            continue
        try:
            passed, _ = is_k_critical_family(g, args.k, family)
        except GraphError as exc:
            print(f"{line} ERROR {exc}", file=sys.stderr)
            ok = False
            continue
        if passed:
            print(line)
            kept += 1
    print(f"kept={kept}", file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgraph",
        description="Generate, verify and certify k-vertex-critical "
        "(P5,dart)-free graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="exhaustive k-vertex-critical generation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", default="p5,dart")
    p.add_argument("--seeds", default="auto", help="'auto' or comma-separated graph6 files")
    p.add_argument("--out", default=None, help="corpus path (manifest at <out>.manifest)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-order", type=int, default=64, dest="max_order")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("check", help="verify criticality of graph6 input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "family"), required=True)
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("canon", help="canonical form of graph6 input")
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("partition", help="hole/antihole partition property checks")
    p.add_argument("--hole", choices=("c5", "antihole"), required=True)
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("certify", help="certifying k-colorability decision")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--db", required=True, help="corpus manifest of the (k+1)-database")
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("filter-critical", help="keep only family-relative k-critical graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=_cmd_filter_critical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
