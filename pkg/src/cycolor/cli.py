"""Command-line front end.

Subcommands: gen, check, solve, spectrum, audit, export-cnf, export-dot.
The primary payload (JSON, DIMACS, or DOT) goes to stdout or --out;
human-oriented tables and progress lines go to stderr so pipelines stay
clean.

Exit codes:
    0  success / checked and true
    1  checked and false (coloring invalid, not colorable, audit failed)
    2  usage error (bad flags or parameter values)
    3  input/output or file-format error
    4  search gave up on a budget before reaching an answer
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import cnf as cnf_mod
from . import coloring as coloring_mod
from . import families, graphs, solver
from .audit import audit_range, summary_to_dict
from .errors import (
    AuditParamsError,
    ColorCountError,
    ColorIndexError,
    CycolorError,
    DisconnectedError,
    DuplicateEdgeError,
    LengthMismatchError,
    MOutOfRangeError,
    SelfLoopError,
    SizeOutOfRangeError,
    TooLargeError,
    UnknownLabelError,
)

EXIT_OK = 0
EXIT_CHECKED_FALSE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_BUDGET = 4

_USAGE_ERRORS = (MOutOfRangeError, SizeOutOfRangeError, ColorCountError, AuditParamsError)
_FORMAT_ERRORS = (
    UnknownLabelError,
    DuplicateEdgeError,
    SelfLoopError,
    ColorIndexError,
    LengthMismatchError,
    DisconnectedError,
    TooLargeError,
)


class _CliFailure(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _CliFailure(EXIT_IO, f"cannot write {out}: {exc}") from exc


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> graphs.Graph:
    try:
        return graphs.from_json(_read(path))
    except CycolorError as exc:
        raise _CliFailure(EXIT_IO, f"{path}: {exc}") from exc


def _load_coloring(path: str) -> coloring_mod.Coloring:
    try:
        return coloring_mod.from_json(_read(path))
    except CycolorError as exc:
        raise _CliFailure(EXIT_IO, f"{path}: {exc}") from exc


def _outcome_dict(out: solver.SearchOutcome) -> dict:
    return {
        "status": out.status,
        "reason": out.reason,
        "nodes": out.nodes,
        "coloring": None if out.coloring is None else coloring_mod.to_dict(out.coloring),
    }


def _cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "gm":
        if args.m is None:
            raise _CliFailure(EXIT_USAGE, "--m is required for --family gm")
        g = families.gen_gm(args.m)
    elif fam in ("path", "cycle", "star"):
        if args.n is None:
            raise _CliFailure(EXIT_USAGE, f"--n is required for --family {fam}")
        g = {"path": families.gen_path, "cycle": families.gen_cycle, "star": families.gen_star}[
            fam
        ](args.n)
    elif fam == "kab":
        if args.a is None or args.b is None:
            raise _CliFailure(EXIT_USAGE, "--a and --b are required for --family kab")
        g = families.gen_complete_bipartite(args.a, args.b)
    elif fam == "tree":
        if args.n is None or args.seed is None:
            raise _CliFailure(EXIT_USAGE, "--n and --seed are required for --family tree")
        g = families.gen_random_tree(args.n, args.seed)
    else:  # pragma: no cover - argparse choices forbid this
        raise _CliFailure(EXIT_USAGE, f"unknown family {fam!r}")
    _emit(graphs.to_json(g), args.out)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cert = _load_coloring(args.coloring)
    verdict = coloring_mod.check_cyclically_interval(g, cert)
    _emit(json.dumps(coloring_mod.verdict_to_dict(verdict), indent=2) + "\n", args.out)
    return EXIT_OK if verdict.ok else EXIT_CHECKED_FALSE


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cfg = solver.SolverConfig(
        symmetry_breaking=not args.no_symmetry_breaking,
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
        edge_order=args.edge_order,
    )
    out = solver.decide(g, args.t, cfg)
    if out.status == solver.COLORABLE:
        assert out.coloring is not None
        _emit(coloring_mod.to_json(out.coloring), args.out)
        print(f"colorable: t={args.t}, {out.nodes} nodes", file=sys.stderr)
        return EXIT_OK
    _emit(json.dumps(_outcome_dict(out), indent=2) + "\n", args.out)
    if out.status == solver.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_CHECKED_FALSE


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cfg = solver.SolverConfig(
        node_budget=args.budget_nodes, time_budget=args.budget_seconds
    )
    result = solver.spectrum(
        g,
        t_min=args.t_min,
        t_max=args.t_max,
        cfg=cfg,
        jobs=args.jobs,
        graph_id=args.graph_id or args.graph,
    )
    payload = {
        "graph_id": result.graph_id,
        "t_min": result.t_min,
        "t_max": result.t_max,
        "outcomes": {
            str(t): _outcome_dict(result.outcomes[t]) for t in sorted(result.outcomes)
        },
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    for t in sorted(result.outcomes):
        out = result.outcomes[t]
        print(f"t={t:>4}  {out.status:<16} nodes={out.nodes}", file=sys.stderr)
    statuses = {o.status for o in result.outcomes.values()}
    if solver.COLORABLE in statuses:
        return EXIT_OK
    if solver.BUDGET_EXCEEDED in statuses:
        return EXIT_BUDGET
    return EXIT_CHECKED_FALSE


def _cmd_audit(args: argparse.Namespace) -> int:
    summary = audit_range(args.m_min, args.m_max, args.exhaustive_limit)
    _emit(json.dumps(summary_to_dict(summary), indent=2) + "\n", args.out)
    for entry in summary.entries:
        verdict = "pass" if entry.passed else f"FAIL at {entry.failing_step}"
        sweep = " (full k0 sweep)" if entry.exhaustive_checked else ""
        print(f"m={entry.m:>5}  k0 in [0, {entry.k0_hi}]  {verdict}{sweep}", file=sys.stderr)
    return EXIT_OK if summary.all_passed else EXIT_CHECKED_FALSE


def _cmd_export_cnf(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    _emit(cnf_mod.export_cnf(g, args.t), args.out)
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cert = None
    if args.coloring is not None:
        cert = _load_coloring(args.coloring)
        if len(cert.colors) != len(g.edges):
            raise LengthMismatchError(
                f"coloring has {len(cert.colors)} entries but graph has {len(g.edges)} edges"
            )
    _emit(graphs.to_dot(g, cert), args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycolor",
        description="Generate, check, search, and audit cyclically-interval edge colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph as JSON")
    p.add_argument("--family", required=True, choices=["gm", "path", "cycle", "star", "kab", "tree"])
    p.add_argument("--m", type=int, help="size parameter for the gm family")
    p.add_argument("--n", type=int, help="size for path (edges), cycle/tree (vertices), star (leaves)")
    p.add_argument("--a", type=int, help="left side size for kab")
    p.add_argument("--b", type=int, help="right side size for kab")
    p.add_argument("--seed", type=int, help="PRNG seed for tree")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="verify a coloring certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--out", help="write verdict JSON to file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="decide one t by exact search")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--edge-order", choices=["degree", "input"], default="degree")
    p.add_argument("--no-symmetry-breaking", action="store_true")
    p.add_argument("--out", help="write certificate/outcome JSON to file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("spectrum", help="decide a whole t range")
    p.add_argument("--graph", required=True)
    p.add_argument("--t-min", type=int, default=None)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--graph-id", default=None)
    p.add_argument("--out", help="write spectrum JSON to file")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("audit", help="audit the impossibility argument over an m range")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--exhaustive-limit", type=int, default=12,
                   help="sweep every k0 exhaustively for m up to this value")
    p.add_argument("--out", help="write summary JSON to file")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("export-cnf", help="emit DIMACS CNF for (graph, t)")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", help="write DIMACS to file")
    p.set_defaults(func=_cmd_export_cnf)

    p = sub.add_parser("export-dot", help="emit Graphviz DOT, optionally color-labeled")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", default=None)
    p.add_argument("--out", help="write DOT to file")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _FORMAT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CycolorError as exc:  # anything else domain-level is unexpected
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
