"""Command-line front door.

Subcommands: check, repair, scale, convert, serve. Output is a short
human-readable report by default; ``--json`` switches stdout to a single
canonical document. Exit codes form a stable scripting contract:
0 success (or consistent), 1 semantic negative (inconsistent), 2 input
or usage error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import IvalueError, SchemaViolation
from .formats import document_for, load_path, serialize
from .intervals import DEFAULT_TOL, NeutralElement
from .repair import repair_fixed_neutral, repair_full
from .ipr import consistency_report
from .workflows import convert_relation, scale_from_chain, scale_from_matrix

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

_KIND_BY_MODEL = {"fuzzy": "fuzzy_relation", "saaty": "saaty_relation", "ipr": "interval_matrix"}


def _fmt_interval(v) -> str:
    return f"[{v.lower:.3f}, {v.upper:.3f}]"


def _print_doc(obj) -> None:
    print(serialize(document_for(obj)))


def _cmd_check(args) -> int:
    doc = load_path(args.file)
    if doc.kind != "interval_matrix":
        raise SchemaViolation(f"check expects an interval_matrix document, got {doc.kind}")
    u = NeutralElement(args.neutral) if args.neutral is not None else None
    report = consistency_report(doc.payload, u, args.tol)
    if args.json:
        _print_doc(report)
    else:
        print(f"reciprocal:   {'yes' if report.is_reciprocal else 'no'}")
        print(f"consistent:   {'yes' if report.is_consistent else 'no'}")
        if report.neutral is not None:
            eps = report.neutral.epsilon
            print(f"neutral:      [{-eps:g}, {eps:g}]")
        print(f"max residual: {report.max_residual:g}")
        if report.worst_triple is not None:
            print(f"worst triple: {report.worst_triple}")
    return EXIT_OK if report.is_consistent else EXIT_NEGATIVE


def _cmd_repair(args) -> int:
    doc = load_path(args.file)
    if doc.kind != "interval_matrix":
        raise SchemaViolation(f"repair expects an interval_matrix document, got {doc.kind}")
    if args.alpha is None:
        solution = repair_full(doc.payload, args.mu)
    else:
        solution = repair_fixed_neutral(doc.payload, args.alpha, args.mu)
    if args.json:
        _print_doc(solution)
    else:
        print(f"priorities: {', '.join(f'{x:g}' for x in solution.nu)}")
        print(f"alpha:      {solution.alpha:g}")
        print(f"objective:  {solution.objective:g}")
        for i, row in enumerate(solution.repaired.rows()):
            print(("row %d:     " % i) + "  ".join(_fmt_interval(v) for v in row))
    return EXIT_OK


def _cmd_scale(args) -> int:
    doc = load_path(args.file)
    if doc.kind == "chain":
        scale = scale_from_chain(doc.payload, args.normalize)
    elif doc.kind == "interval_matrix":
        scale = scale_from_matrix(doc.payload, args.normalize)
    else:
        raise SchemaViolation(f"scale expects a chain or interval_matrix document, got {doc.kind}")
    if args.json:
        _print_doc(scale)
    else:
        eps = scale.neutral.epsilon
        print(f"neutral: [{-eps:.3f}, {eps:.3f}]")
        if scale.normalization_constant is not None:
            print(f"normalization constant: {scale.normalization_constant:g}")
        for k, v in enumerate(scale.values, start=1):
            print(f"v{k}: {_fmt_interval(v)}")
    return EXIT_OK


def _cmd_convert(args) -> int:
    doc = load_path(args.file)
    expected = _KIND_BY_MODEL[args.source]
    if doc.kind != expected:
        raise SchemaViolation(
            f"convert --from {args.source} expects a {expected} document, got {doc.kind}"
        )
    converted = convert_relation(doc.payload, args.target)
    if args.json:
        _print_doc(converted)
    else:
        entries = converted.entries if hasattr(converted, "entries") else converted
        for i, row in enumerate(entries.rows()):
            print(("row %d: " % i) + "  ".join(_fmt_interval(v) for v in row))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import os

    import uvicorn

    from .service import create_app, resolve_addr, resolve_log

    host, port = resolve_addr(args.addr)
    log_path = resolve_log(args.log)
    ui_dir = None
    for candidate in ("frontend/dist", os.path.join(os.path.dirname(__file__), "ui_static")):
        if os.path.isdir(candidate):
            ui_dir = candidate
            break
    app = create_app(log_path, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivalue",
        description="Interval-valued preference toolkit: check, repair, scale, convert, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="consistency-check an interval matrix file")
    p.add_argument("file")
    p.add_argument("--neutral", type=float, default=None, metavar="EPS",
                   help="neutral half-width; inferred from the diagonal when omitted")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("repair", help="nearest consistent matrix (least squares)")
    p.add_argument("file")
    p.add_argument("--mu", type=float, default=0.0, help="prescribed mean of the priorities")
    p.add_argument("--alpha", type=float, default=None,
                   help="fix the neutral half-width instead of optimizing it")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("scale", help="derive a value scale from a chain or matrix file")
    p.add_argument("file")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_scale)

    p = sub.add_parser("convert", help="convert between fuzzy, saaty, and interval forms")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, choices=("fuzzy", "saaty", "ipr"))
    p.add_argument("--to", dest="target", required=True, choices=("fuzzy", "saaty", "ipr"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("serve", help="run the HTTP service until interrupted")
    p.add_argument("--addr", default=None, help="host:port (default env IVALUE_ADDR or 127.0.0.1:8080)")
    p.add_argument("--log", default=None, help="event log path (default env IVALUE_LOG or ./sessions.log)")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the contract
        return int(exc.code or 0)
    try:
        return args.func(args)
    except IvalueError as exc:
        where = f" at {exc.path}" if exc.path else ""
        print(f"error: {exc.error_name}: {exc.detail or exc.error_name}{where}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
