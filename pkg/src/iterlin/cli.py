"""Command-line front end.

One subcommand per deliverable: Euler index sets, degree growth constants,
landscape classification, explicit iteration, max-degree sequences, family
generation and the verification sweeps.

Exit codes: 0 success, 1 input or validation error, 2 budget exceeded
(partial results still printed), 3 verification violations found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .dyadic import DyadicRational
from .edgelist import ParseError, parse_edge_list, write_edge_list
from .euler import DisconnectedGraph, EdgelessGraph, lgepi
from .families import BadParameter, FAMILY_NAMES, FamilySpec, generate
from .graph import Graph, GraphError
from .growth import METHOD_PARTIAL, NotProlific, classify, delta_sequence, dgc
from .harness import (
    EnumerationReport,
    NTooLarge,
    verify_dgc_landscape,
    verify_eg0_uniqueness,
    verify_lgepi_oracle_equiv,
)
from .lineop import (
    BudgetExceeded,
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_ITERATIONS,
    IterationBudget,
    iterate_line_graph,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VIOLATIONS = 3

ENV_BUDGET_EDGES = "ITERLIN_BUDGET_EDGES"


def _default_edge_budget() -> int:
    raw = os.environ.get(ENV_BUDGET_EDGES)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_EDGES


def _make_budget(edges: Optional[int], iters: Optional[int]) -> IterationBudget:
    e = edges if edges is not None else _default_edge_budget()
    k = iters if iters is not None else DEFAULT_MAX_ITERATIONS
    return IterationBudget(max_vertices=e, max_edges=e, max_iterations=k)


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_edge_list(text)


def _dyadic_str(v: DyadicRational) -> str:
    return f"{v} ({float(v)})"


class _Output:
    """Collects the facts of one run; prints text or the JSON envelope."""

    def __init__(self, command: str, source: str, as_json: bool):
        self.command = command
        self.source = source
        self.as_json = as_json
        self.result: dict = {}
        self.method: Optional[str] = None
        self.reason: Optional[str] = None
        self.budget: Optional[dict] = None
        self.lines: list[str] = []
        self.start = time.monotonic()

    def say(self, line: str) -> None:
        self.lines.append(line)

    def emit(self) -> None:
        elapsed = time.monotonic() - self.start
        if self.as_json:
            doc = {
                "command": self.command,
                "input": self.source,
                "result": self.result,
                "method": self.method,
                "reason": self.reason,
                "budget": self.budget,
                "elapsed": elapsed,
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            for line in self.lines:
                print(line)


def _budget_dict(b: IterationBudget) -> dict:
    return {"max_edges": b.max_edges, "max_iterations": b.max_iterations}


def _cmd_lgepi(args) -> int:
    out = _Output("lgepi", args.file, args.json)
    g = _read_graph(args.file)
    res = lgepi(g)
    indices = res.as_sorted()
    out.result = {"indices": indices, "partial": res.partial}
    out.reason = res.reason
    out.say(f"indices: {{{', '.join(map(str, indices))}}}")
    out.say(f"reason: {res.reason}")
    out.emit()
    return EXIT_OK


def _cmd_dgc(args) -> int:
    out = _Output("dgc", args.file, args.json)
    g = _read_graph(args.file)
    budget = _make_budget(args.budget_edges, args.budget_iters)
    out.budget = _budget_dict(budget)
    res = dgc(g, budget=budget)
    out.method = res.method
    if res.value is not None:
        out.result = {
            "value": str(res.value),
            "value_float": float(res.value),
            "level": res.level,
            "path_length": res.path_length,
            "mdgpi_upper": res.mdgpi_upper,
        }
        out.say(f"dgc = {_dyadic_str(res.value)}")
        out.say(f"method: {res.method}")
        if res.level is not None:
            out.say(f"level: {res.level}")
        out.emit()
        return EXIT_OK
    lb = str(res.lower_bound) if res.lower_bound is not None else None
    out.result = {"value": None, "lower_bound": lb}
    out.say("dgc: budget exhausted before an exact value was certified")
    if res.lower_bound is not None:
        out.say(f"lower bound: {_dyadic_str(res.lower_bound)}")
    out.emit()
    return EXIT_BUDGET


def _cmd_classify(args) -> int:
    out = _Output("classify", args.file, args.json)
    g = _read_graph(args.file)
    budget = _make_budget(args.budget_edges, args.budget_iters)
    out.budget = _budget_dict(budget)
    label = classify(g, budget=budget)
    out.result = {
        "label": label.label,
        "value": str(label.value) if label.value is not None else None,
    }
    out.say(f"class: {label.label}")
    if label.value is not None:
        out.say(f"dgc = {_dyadic_str(label.value)}")
    exit_code = EXIT_OK
    if label.result is not None and label.result.method == METHOD_PARTIAL:
        lb = label.result.lower_bound
        out.result["lower_bound"] = str(lb) if lb is not None else None
        if lb is not None:
            out.say(f"dgc lower bound: {_dyadic_str(lb)}")
        exit_code = EXIT_BUDGET
    out.emit()
    return exit_code


def _write_graph(g: Graph, dest: Optional[str]) -> None:
    text = write_edge_list(g, relabel=True)
    if dest is None or dest == "-":
        if text:
            print(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text + ("\n" if text else ""))


def _cmd_iterate(args) -> int:
    out = _Output("iterate", args.file, args.json)
    g = _read_graph(args.file)
    budget = _make_budget(args.max_edges, None)
    out.budget = _budget_dict(budget)
    try:
        h = iterate_line_graph(g, args.k, budget)
    except BudgetExceeded as exc:
        out.result = {"error": "budget-exceeded", "level": exc.level}
        out.say(f"budget exceeded at level {exc.level} (size {exc.size})")
        out.emit()
        return EXIT_BUDGET
    out.result = {"n": h.n, "m": h.m, "edges": [list(e) for e in h.edges]}
    out.say(f"L^{args.k}: {h.n} vertices, {h.m} edges")
    if args.json:
        out.emit()
    else:
        out.emit()
        _write_graph(h, args.output)
    return EXIT_OK


def _cmd_deltas(args) -> int:
    out = _Output("deltas", args.file, args.json)
    g = _read_graph(args.file)
    budget = _make_budget(args.max_edges, None)
    out.budget = _budget_dict(budget)
    seq = delta_sequence(g, args.k, budget)
    out.result = {"deltas": list(seq.values), "truncated": seq.truncated}
    rendered = ", ".join(map(str, seq.values))
    if seq.truncated:
        rendered += ", ... (truncated)"
    out.say(f"deltas: [{rendered}]")
    out.emit()
    return EXIT_BUDGET if seq.truncated else EXIT_OK


def _cmd_gen(args) -> int:
    out = _Output("gen", args.family, args.json)
    spec = FamilySpec(args.family, tuple(args.params))
    g = generate(spec)
    out.result = {"family": str(spec), "n": g.n, "m": g.m,
                  "edges": [list(e) for e in g.edges]}
    if args.json:
        out.emit()
    else:
        _write_graph(g, args.output)
    return EXIT_OK


def _report_lines(report: EnumerationReport) -> list[str]:
    lines = [
        f"scanned: {report.graphs_scanned} connected labeled graphs (n <= {report.n})",
        f"violations: {len(report.violations)}",
    ]
    for note in report.notes:
        lines.append(note)
    for v in report.violations[:50]:
        lines.append(f"  n={v.n} edges={list(v.edges)} [{v.prop}] {v.details}")
    if len(report.violations) > 50:
        lines.append(f"  ... and {len(report.violations) - 50} more")
    return lines


def _cmd_verify(args) -> int:
    out = _Output("verify", args.target, args.json)
    if args.target == "eg0":
        n_max = args.n_max if args.n_max is not None else 7
        report = verify_eg0_uniqueness(n_max)
    elif args.target == "lgepi":
        n_max = args.n_max if args.n_max is not None else 7
        report = verify_lgepi_oracle_equiv(n_max)
    else:
        n_max = args.n_max if args.n_max is not None else 6
        report = verify_dgc_landscape(n_max)
    out.result = {
        "n_max": report.n,
        "graphs_scanned": report.graphs_scanned,
        "violations": [
            {"n": v.n, "edges": [list(e) for e in v.edges],
             "property": v.prop, "details": v.details}
            for v in report.violations
        ],
        "notes": list(report.notes),
    }
    for line in _report_lines(report):
        out.say(line)
    out.emit()
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iterlin",
        description="Euler paths and degree growth of iterated line graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON document instead of text")

    p = sub.add_parser("lgepi", help="Euler-path index set of the iterates")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_lgepi)

    p = sub.add_parser("dgc", help="exact degree growth constant")
    p.add_argument("file")
    p.add_argument("--budget-edges", type=int, default=None)
    p.add_argument("--budget-iters", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_dgc)

    p = sub.add_parser("classify", help="dgc landscape class")
    p.add_argument("file")
    p.add_argument("--budget-edges", type=int, default=None)
    p.add_argument("--budget-iters", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("iterate", help="materialize the k-th iterate")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    add_json(p)
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("deltas", help="max-degree sequence of the iterates")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-edges", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_deltas)

    p = sub.add_parser("gen", help="emit a named family member")
    p.add_argument("family", choices=sorted(FAMILY_NAMES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output", default=None)
    add_json(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("target", choices=["eg0", "lgepi", "landscape"])
    p.add_argument("--n-max", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphError, BadParameter, NotProlific, EdgelessGraph,
            DisconnectedGraph, NTooLarge, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
