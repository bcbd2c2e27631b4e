"""Command-line front end: ``twoswitch analyze | space | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from . import __version__
from .census import census4, count_summary, degree_formula
from .errors import CapExceededError, GraphFormatError, NotGraphicalError
from .forests import decompose_unicyclic, f_degree, u_degree_formula
from .graph import (
    DegreeSequence,
    Graph,
    complete_graph,
    cycle_graph,
    diameter,
    empty_graph,
    format_edge_list,
    girth,
    is_connected,
    is_forest,
    is_unicyclic,
    parse_graph,
    path_graph,
    petersen_graph,
    read_graphs,
    star_graph,
    to_graph6,
)
from .realization import MAX_N, MAX_REALIZATIONS, build_realization_graph
from .split import analyze_split, is_prime, is_split
from .suites import SUITES, graph_checks, run_suite
from .switch import active_vertices, two_switch_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_NAMED = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
    "star": star_graph,
}


def load_graphs(source: str) -> list[tuple[str, Graph]]:
    """Graphs from a file path, a ``name:k`` shorthand, an edge list or graph6 text."""
    if os.path.isfile(source):
        return [(f"{source}#{i}", g) for i, g in enumerate(read_graphs(source))]
    m = re.fullmatch(r"(path|cycle|complete|empty|star):(\d+)", source.strip())
    if m:
        return [(source, _NAMED[m.group(1)](int(m.group(2))))]
    if source.strip() == "petersen":
        return [(source, petersen_graph())]
    return [(source, parse_graph(source))]


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    return x


def build_report(label: str, g: Graph) -> dict:
    """Everything the library can say about one graph."""
    deg = two_switch_degree(g)
    rep = {
        "input": label,
        "graph6": to_graph6(g),
        "edges": format_edge_list(g),
        "n": g.n,
        "m": g.m,
        "sequence": DegreeSequence(g.degrees).compact_str(),
        "deg": deg,
        "deg_formula": degree_formula(g),
    }
    if is_forest(g):
        rep["deg_f"] = f_degree(g)
    if is_unicyclic(g):
        rep["deg_u"] = u_degree_formula(g)
        rep["unicyclic"] = decompose_unicyclic(g).to_dict()
    rep["connected"] = is_connected(g)
    rep["girth"] = _jsonable(girth(g))
    rep["diameter"] = _jsonable(diameter(g)) if g.n else 0
    rep["counts"] = count_summary(g).to_dict()
    rep["census"] = census4(g).to_dict()
    rep["activity"] = active_vertices(g).to_dict()
    if g.n and is_split(g):
        rep["split"] = analyze_split(g).to_dict()
    if g.n <= 12:
        rep["prime"] = is_prime(g)
    rep["checks"] = [{"check": k, "passed": v} for k, v in graph_checks(g, deg).items()]
    return rep


def _table(rows: list[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {json.dumps(v) if isinstance(v, bool) else v}" for k, v in rows)


def _report_table(rep: dict) -> str:
    rows = []
    for k, v in rep.items():
        if k == "checks":
            for c in v:
                rows.append((f"check {c['check']}", "pass" if c["passed"] else "FAIL"))
        elif isinstance(v, dict):
            for kk, vv in v.items():
                rows.append((f"{k}.{kk}", vv))
        else:
            rows.append((k, v))
    return _table(rows)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# ----------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    reports = []
    for source in args.graphs:
        for label, g in load_graphs(source):
            reports.append(build_report(label, g))
    if args.format == "json":
        print(_dump(reports if len(reports) != 1 else reports[0]))
    else:
        print("\n\n".join(_report_table(r) for r in reports))
    return EXIT_FAIL if any(not c["passed"] for r in reports for c in r["checks"]) else EXIT_OK


def cmd_space(args) -> int:
    s = DegreeSequence.parse(args.sequence)
    x = build_realization_graph(s, args.filter, cap=args.cap, max_n=args.max_n)
    summary = x.summary()
    summary["sequence"] = s.compact_str()
    if args.format == "dot":
        head = "".join(f"// {k}: {json.dumps(v)}\n" for k, v in summary.items())
        body = head + x.to_dot()
    elif args.format == "json":
        body = _dump({"summary": summary, "metagraph": json.loads(x.to_json())}) + "\n"
    else:
        rows = [(k, json.dumps(v) if isinstance(v, dict) else v) for k, v in summary.items()]
        body = _table(rows) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(body)
        print(_table([(k, json.dumps(v) if isinstance(v, dict) else v) for k, v in summary.items()]))
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = [
        run_suite(name, args.max_n, seed=args.seed, random_count=args.random) for name in names
    ]
    if args.format == "json":
        print(_dump([r.to_dict() for r in results]))
    else:
        rows = []
        for r in results:
            for t in r.tallies.values():
                status = "pass" if t.passed else f"FAIL ({t.failed}/{t.tested}, e.g. {t.counterexample})"
                rows.append((f"{r.suite}.{t.name}", f"{t.tested:>7}  {status}"))
        print(_table(rows))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="twoswitch",
        description="2-switch degrees, activity, split graphs and realization graphs of small graphs.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser(
        "analyze",
        help="report degrees, counts, activity and identity checks for graphs",
        description="GRAPH is a file (one graph per line), graph6 text, an edge list "
        "'n; u-v,u-v', or a shorthand such as path:7, cycle:6, complete:4, star:3, petersen.",
    )
    a.add_argument("graphs", nargs="+", metavar="GRAPH")
    a.add_argument("--format", choices=("json", "table"), default="table")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("space", help="build the realization graph of a degree sequence")
    s.add_argument("sequence", help="comma-separated degrees, e.g. 2,2,2,1,1")
    s.add_argument("--filter", choices=("all", "forests", "trees", "unicyclic", "connected"), default="all")
    s.add_argument("--format", choices=("json", "dot", "table"), default="table")
    s.add_argument("--max-n", type=int, default=MAX_N)
    s.add_argument("--cap", type=int, default=MAX_REALIZATIONS, help="maximum number of realizations")
    s.add_argument("--output", "-o", help="write the metagraph here and print only the summary")
    s.set_defaults(func=cmd_space)

    v = sub.add_parser("verify", help="run exhaustive identity suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--random", type=int, default=0, help="extra random graphs for the identities suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("json", "table"), default="table")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"twoswitch: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, NotGraphicalError, ValueError) as exc:
        print(f"twoswitch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
