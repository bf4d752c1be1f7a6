"""Command-line front end.

Subcommands: ``spectrum`` (eigenvalues of a graph file), ``check``
(balance / negative-4-cycle / bipartiteness report), ``construct`` (write
the extremal graph), ``bound`` (closed-form bounds), ``verify``
(exhaustive certification, by partite sizes or by order).

Exit codes: 0 success or CONFIRMED, 1 REFUTED, 2 parse error, 3 numeric
failure, 4 bad parameters, 5 budget exceeded.  Machine output is JSON
(``--csv`` switches the verify statistics to CSV); every JSON document
carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import search, sgio
from .core import (
    CycleWitness,
    bipartition,
    has_negative_c4,
    is_balanced,
    shortest_negative_cycle,
)
from .errors import (
    BadParamsError,
    BudgetExceededError,
    ConvergenceFailureError,
    NotBipartiteError,
    ParseError,
    SgraphError,
)
from .extremal import bound_report_order, bound_report_sizes, extremal_graph
from .spectral import graph_spectrum

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_PARSE = 2
EXIT_NUMERIC = 3
EXIT_BAD_PARAMS = 4
EXIT_BUDGET = 5


def _emit(doc: dict) -> None:
    print(json.dumps({"schema": 1, **doc}))


def _witness_dict(w: CycleWitness | None) -> dict | None:
    if w is None:
        return None
    return {"vertices": list(w.vertices), "sign": w.sign, "length": w.length}


def _cmd_spectrum(args) -> int:
    g = sgio.load(args.path)
    spec = graph_spectrum(g)
    _emit(spec.to_json_dict())
    return EXIT_OK


def _cmd_check(args) -> int:
    g = sgio.load(args.path)
    try:
        sides = bipartition(g)
        bip: dict = {"bipartite": True, "sides": [sides.r, sides.s], "odd_cycle": None}
    except NotBipartiteError as exc:
        bip = {"bipartite": False, "sides": None, "odd_cycle": _witness_dict(exc.witness)}
    neg_cycle = shortest_negative_cycle(g)
    _emit(
        {
            "n": g.n,
            "m": g.m,
            **bip,
            "balanced": is_balanced(g),
            "neg_c4": _witness_dict(has_negative_c4(g)),
            "girth_neg": neg_cycle.length if neg_cycle else None,
            "neg_cycle": _witness_dict(neg_cycle),
        }
    )
    return EXIT_OK


def _cmd_construct(args) -> int:
    g, _ = extremal_graph(args.r, args.s)
    if args.out == "-":
        sys.stdout.write(sgio.dumps(g))
    else:
        sgio.dump(g, args.out)
    return EXIT_OK


def _cmd_bound(args) -> int:
    if args.n is not None:
        if args.r is not None or args.s is not None:
            raise BadParamsError("give either --n or both --r and --s")
        report = bound_report_order(args.n)
    else:
        if args.r is None or args.s is None:
            raise BadParamsError("give either --n or both --r and --s")
        report = bound_report_sizes(args.r, args.s)
    if args.json:
        _emit(report.to_json_dict())
    else:
        print(repr(report.bound))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.mode == "sizes":
        cert = search.verify_fixed_sizes(
            args.a,
            args.b,
            jobs=args.jobs,
            stretch=args.stretch,
            connected_only=args.connected_only,
            canonical_underlying=args.canonical,
        )
        if args.csv:
            print(search.CSV_HEADER)
            print(search.certificate_csv_row(cert))
        else:
            _emit(cert.to_json_dict())
        return EXIT_OK if cert.verdict == search.CONFIRMED else EXIT_REFUTED
    if args.b is not None:
        raise BadParamsError("verify order takes a single n")
    cert = search.verify_fixed_order(args.a, jobs=args.jobs, stretch=args.stretch)
    if args.csv:
        print(search.CSV_HEADER)
        for sub in cert.per_split:
            print(search.certificate_csv_row(sub))
    else:
        _emit(cert.to_json_dict())
    return EXIT_OK if cert.verdict == search.CONFIRMED else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgraph", description="signed-graph spectral toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues of a signed graph file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("check", help="balance / negative C4 / bipartiteness report")
    p.add_argument("path")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="write the extremal graph for sizes (r, s)")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("out", help="output path, or - for stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("bound", help="closed-form spectral-radius bound")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true", help="full report instead of the value")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="exhaustive verification of the extremal claims")
    p.add_argument("mode", choices=["sizes", "order"])
    p.add_argument("a", type=int, help="r (sizes mode) or n (order mode)")
    p.add_argument("b", type=int, nargs="?", help="s (sizes mode only)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stretch", action="store_true", help="allow r*s up to 20")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--canonical", action="store_true",
                   help="enumerate canonical underlying graphs only")
    p.add_argument("--csv", action="store_true", help="statistics as CSV")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify" and args.mode == "sizes" and args.b is None:
            raise BadParamsError("verify sizes takes r and s")
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConvergenceFailureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BadParamsError, SgraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
