"""Command line front end.

Exit codes: 0 success (or ``found``), 2 bad input, 3 ``--expect-certified``
not met, 4 search ended ``not_found``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import certify
from .core import CONSTRUCTORS, DomainError, GbsSet, construct, fgbs_upper
from .search import SearchConfig, search_distinguisher
from .tables import render

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EXPECTATION = 3
EXIT_NOT_FOUND = 4


class InputError(ValueError):
    pass


def set_to_document(s: GbsSet) -> dict:
    meta = {"family": s.family, "nominal_size": s.nominal_size, "size": s.size}
    meta.update(s.params)
    return {"d": s.d, "labels": [[m, n] for m, n in s.labels], "meta": meta}


def document_to_set(doc) -> GbsSet:
    if not isinstance(doc, dict) or "d" not in doc or "labels" not in doc:
        raise InputError("document needs 'd' and 'labels'")
    d, labels = doc["d"], doc["labels"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise InputError("'d' must be an integer")
    if not isinstance(labels, list) or not all(
        isinstance(x, list) and len(x) == 2 and all(isinstance(c, int) and not isinstance(c, bool) for c in x)
        for x in labels
    ):
        raise InputError("'labels' must be a list of [m, n] integer pairs")
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise InputError("'meta' must be an object")
    params = {k: v for k, v in meta.items() if k not in ("family", "nominal_size", "size")}
    try:
        return GbsSet(
            d,
            tuple(tuple(x) for x in labels),
            family=meta.get("family"),
            nominal_size=meta.get("nominal_size"),
            params=params,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def read_document(path: str) -> GbsSet:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read set document: {exc}") from exc
    return document_to_set(doc)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_construct(args) -> int:
    s = construct(args.family, args.d, args.m)
    _emit(set_to_document(s))
    return EXIT_OK


def cmd_certify(args) -> int:
    s = read_document(args.input)
    if len(s) < 2:
        raise InputError("certification needs at least two states")
    report = certify(s)
    _emit(report.to_dict())
    if args.expect_certified and not report.certified:
        return EXIT_EXPECTATION
    return EXIT_OK


def cmd_search(args) -> int:
    s = read_document(args.input)
    if len(s) < 2:
        raise InputError("search needs at least two states")
    try:
        cfg = SearchConfig(
            restarts=args.restarts, max_iters=args.iters, seed=args.seed, tol_found=args.tol_found
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = search_distinguisher(s, cfg)
    _emit(report.to_dict())
    return EXIT_OK if report.found else EXIT_NOT_FOUND


def cmd_tables(args) -> int:
    sys.stdout.write(render(args.which, args.format, args.audit))
    return EXIT_OK


def cmd_bound(args) -> int:
    _emit(fgbs_upper(args.d).to_dict())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbs-locc",
        description="Generalized Bell state sets: construction, one-way LOCC certificates, search, tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a set document for a construction family")
    p.add_argument("--family", required=True, choices=sorted(CONSTRUCTORS))
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="run the exact certifier on a set document")
    p.add_argument("--input", default="-", help="path or - for stdin")
    p.add_argument("--expect-certified", action="store_true")
    p.set_defaults(func=cmd_certify)

    defaults = SearchConfig()
    p = sub.add_parser("search", help="numerically search for a distinguisher vector")
    p.add_argument("--input", default="-", help="path or - for stdin")
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--iters", type=int, default=defaults.max_iters)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--tol-found", type=float, default=defaults.tol_found)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="regenerate comparison table 1-4")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--audit", action="store_true", help="add distinct-label count columns")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("bound", help="upper bounds on the minimum indistinguishable set size")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
