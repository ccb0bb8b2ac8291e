"""Command-line entry point.

Every subcommand writes one JSON record per processed graph to standard
output and a short human summary to standard error.  The exit status is 0
exactly when every record's outcome is ``ok``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from .canon import canonical_graph, certificate, graph_from_certificate
from .construct import (
    BiregularGraph,
    ConstructionError,
    base_graph_names,
    base_graphs,
    foundational_from_cubic,
    q_of_biregular,
    random_expansion,
)
from .enumeration import (
    Census,
    enumerate_biregular34,
    enumerate_cubic,
    enumerate_quintic_tp,
)
from .formats import ParseError, format_qmg, read_graph, write_graph
from .mgraph import (
    Multigraph,
    corollary1_tally,
    has_triangle_property,
    is_quintic,
    is_simple,
    t_of_edge,
    triangle_free_edges,
)
from .patterns import classify_base
from .reduce import InconsistencyError, StuckError, reduce_to_base


@dataclass
class RunReport:
    command: str
    outcome: str = "ok"
    inputs: dict[str, str] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def as_json(self) -> dict:
        return {
            "command": self.command,
            "outcome": self.outcome,
            "inputs": self.inputs,
            "artifacts": self.artifacts,
            **self.details,
        }


def _digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def _qmg_inline(g: Multigraph) -> str:
    return format_qmg(g).strip().replace("\n", ";")


def _load(path: str, command: str) -> tuple[Multigraph | None, RunReport]:
    rep = RunReport(command)
    try:
        rep.inputs[path] = _digest(path)
        return read_graph(path), rep
    except ParseError as exc:
        rep.outcome = "error"
        rep.details["error"] = f"{path}: {exc}"
    except OSError as exc:
        rep.outcome = "error"
        rep.details["error"] = str(exc)
    return None, rep


def _edge_triangle_counts(g: Multigraph) -> list[list[int]]:
    return [[u, v, k, t_of_edge(g, u, v)] for u, v, k in g.edges()]


# subcommands ---------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> list[RunReport]:
    out = []
    for path in args.files:
        g, rep = _load(path, "check")
        if g is not None:
            counts = _edge_triangle_counts(g)
            quintic, tp = is_quintic(g), has_triangle_property(g)
            rep.details.update(
                order=g.order,
                quintic=quintic,
                triangle_property=tp,
                edge_triangle_counts=counts,
                min_edge_triangles=min((c[3] for c in counts), default=0),
                triangle_free_edges=[list(e) for e in triangle_free_edges(g)],
            )
            if is_simple(g) and quintic:
                rich, half = corollary1_tally(g)
                rep.details["corollary1"] = {"rich_edges": rich, "needed": half, "holds": rich >= half}
            if not (quintic and tp):
                rep.outcome = "violation"
                rep.details["error"] = "not quintic" if not quintic else "lacks the triangle property"
        out.append(rep)
    return out


def cmd_canon(args: argparse.Namespace) -> list[RunReport]:
    out = []
    for path in args.files:
        g, rep = _load(path, "canon")
        if g is not None:
            rep.details.update(certificate=certificate(g), canonical=_qmg_inline(canonical_graph(g)))
        out.append(rep)
    return out


def cmd_classify(args: argparse.Namespace) -> list[RunReport]:
    out = []
    for path in args.files:
        g, rep = _load(path, "classify")
        if g is not None:
            try:
                base = classify_base(g)
            except ValueError as exc:
                rep.outcome = "violation"
                rep.details["error"] = str(exc)
            else:
                rep.details["class"] = base.tag
                if base.root is not None:
                    rep.details["root"] = _qmg_inline(base.root)
        out.append(rep)
    return out


def _reduce_record(g: Multigraph, found_shrink: bool) -> dict[str, Any]:
    """Reduce one graph; picklable so it can run in a worker process."""
    rec: dict[str, Any] = {"certificate": certificate(g), "order": g.order}
    try:
        trace = reduce_to_base(g, enable_found_shrink=found_shrink)
    except InconsistencyError as exc:
        rec.update(
            outcome="finding",
            rule=exc.rule,
            match=exc.match.as_json(),
            graph=_qmg_inline(exc.graph),
            detail=str(exc),
        )
        return rec
    except StuckError as exc:
        rec.update(outcome="stuck", graph=_qmg_inline(exc.graph))
        return rec
    rec.update(
        outcome="ok",
        steps=[s.as_json() for s in trace.steps],
        terminals=[t.tag for t in trace.terminals],
    )
    return rec


def cmd_reduce(args: argparse.Namespace) -> list[RunReport]:
    g, rep = _load(args.file, "reduce")
    if g is None:
        return [rep]
    if not (is_quintic(g) and has_triangle_property(g)):
        rep.outcome = "violation"
        rep.details["error"] = "input is not a quintic triangle-property graph"
        return [rep]
    rec = _reduce_record(g, args.enable_found_shrink)
    rep.outcome = rec.pop("outcome")
    steps = rec.pop("steps", [])
    if args.emit_trace:
        Path(args.emit_trace).write_text("".join(json.dumps(s, sort_keys=True) + "\n" for s in steps))
        rep.artifacts.append(args.emit_trace)
    rep.details.update(rec, step_count=len(steps), rules=[s["rule"] for s in steps])
    return [rep]


def _emit_graphs(graphs: Sequence[tuple[str, Multigraph]], out: str | None, command: str) -> list[RunReport]:
    reports = []
    if out:
        Path(out).mkdir(parents=True, exist_ok=True)
    for name, g in graphs:
        rep = RunReport(command, details={"name": name, "order": g.order, "qmg": _qmg_inline(g)})
        if out:
            path = Path(out) / f"{name}.qmg"
            write_graph(g, path, comment=name)
            rep.artifacts.append(str(path))
        reports.append(rep)
    return reports


def _biregular_from_graph(g: Multigraph) -> BiregularGraph:
    part_a = tuple(v for v in g.vertices() if g.degree(v) == 4)
    part_b = tuple(v for v in g.vertices() if g.degree(v) != 4)
    edges = frozenset((u, v) if u in part_a else (v, u) for u, v, _ in g.edges())
    return BiregularGraph(part_a, part_b, edges)


def cmd_generate(args: argparse.Namespace) -> list[RunReport]:
    what = args.what
    if what == "base":
        return _emit_graphs(list(zip(base_graph_names(), base_graphs())), args.out, "generate")
    g, rep = _load(args.file, "generate")
    if g is None:
        return [rep]
    try:
        if what == "q-of":
            return _emit_graphs([("q-of", q_of_biregular(_biregular_from_graph(g)))], args.out, "generate")
        if what == "foundational":
            return _emit_graphs([("foundational", foundational_from_cubic(g))], args.out, "generate")
    except ConstructionError as exc:
        rep.outcome = "error"
        rep.details["error"] = str(exc)
        return [rep]
    rng = random.Random(args.seed)
    made = []
    cur = g
    for i in range(args.steps):
        exp = random_expansion(cur, rng, kind=args.kind)
        if exp is None:
            rep.outcome = "error"
            rep.details["error"] = f"no valid expansion found at step {i}"
            return [rep]
        cur = exp.graph
        made.append((f"expand-{i + 1}", cur))
    return _emit_graphs(made, args.out, "generate")


_CENSUS: dict[str, Callable[[argparse.Namespace], Census]] = {
    "quintic-tp": lambda a: enumerate_quintic_tp(a.n, connected_only=a.connected, threads=a.threads),
    "biregular": lambda a: enumerate_biregular34(a.n),
    "cubic": lambda a: enumerate_cubic(a.n),
}


def cmd_enumerate(args: argparse.Namespace) -> list[RunReport]:
    try:
        census = _CENSUS[args.family](args)
    except ValueError as exc:
        return [RunReport("enumerate", "error", details={"error": str(exc)})]
    reports = []
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i, (cert, g) in enumerate(zip(census.certs, census.graphs())):
        rep = RunReport("enumerate", details={"family": args.family, "index": i, "certificate": cert})
        if out:
            path = out / f"{args.family}-{args.n}-{i:04d}.qmg"
            write_graph(g, path, comment=cert)
            rep.artifacts.append(str(path))
        reports.append(rep)
    summary = RunReport("enumerate", details={"family": args.family, "n": args.n, "count": census.count})
    if out:
        path = out / "census.jsonl"
        path.write_text(json.dumps({"order": census.order, "count": census.count, "certs": list(census.certs)}) + "\n")
        summary.artifacts.append(str(path))
    return reports + [summary]


def _closure_record(cert: str) -> dict[str, Any]:
    return _reduce_record(graph_from_certificate(cert), False)


def _map(fn: Callable[[Any], Any], items: Iterable[Any], threads: int) -> list[Any]:
    items = list(items)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_verify_closure(args: argparse.Namespace) -> list[RunReport]:
    try:
        census = enumerate_quintic_tp(args.n, connected_only=True, threads=args.threads)
    except ValueError as exc:
        return [RunReport("verify-closure", "error", details={"error": str(exc)})]
    out = Path(args.out) if args.out else None
    reports = []
    for rec in _map(_closure_record, census.certs, args.threads):
        outcome = rec.pop("outcome")
        steps = rec.pop("steps", [])
        rep = RunReport("verify-closure", outcome, details={**rec, "step_count": len(steps)})
        if outcome != "ok" and out:
            out.mkdir(parents=True, exist_ok=True)
            path = out / f"repro-{rec['certificate'][:24]}.qmg"
            path.write_text(rec["graph"].replace(";", "\n") + "\n")
            rep.artifacts.append(str(path))
        reports.append(rep)
    return reports


def cmd_verify_corollary(args: argparse.Namespace) -> list[RunReport]:
    try:
        census = enumerate_quintic_tp(args.n, connected_only=args.connected, threads=args.threads)
    except ValueError as exc:
        return [RunReport("verify-corollary", "error", details={"error": str(exc)})]
    reports = []
    for cert, g in zip(census.certs, census.graphs()):
        if not is_simple(g):
            continue
        rich, half = corollary1_tally(g)
        reports.append(RunReport(
            "verify-corollary",
            "ok" if rich >= half else "violation",
            details={"certificate": cert, "rich_edges": rich, "needed": half},
        ))
    return reports


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quintri", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="directory (or file) for written artifacts")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("check", cmd_check, "quintic-ness, triangle property and per-edge triangle counts"),
        ("canon", cmd_canon, "canonical certificate and relabelled graph"),
        ("classify", cmd_classify, "terminal class (base, foundational or not terminal)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("files", nargs="+")
        p.set_defaults(func=fn)

    p = sub.add_parser("reduce", parents=[common], help="reduce a graph to a terminal class")
    p.add_argument("file")
    p.add_argument("--emit-trace", metavar="PATH", help="write one JSON line per step")
    p.add_argument("--enable-found-shrink", action="store_true", help="also shrink foundational graphs")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", parents=[common], help="build fixture and derived graphs")
    p.add_argument("what", choices=["base", "q-of", "foundational", "expand"])
    p.add_argument("file", nargs="?", help="biregular graph, cubic root, or graph to expand")
    p.add_argument("--matching", default="auto", choices=["auto"], help="perfect matching choice")
    p.add_argument("--steps", type=int, default=1, help="number of random expansions")
    p.add_argument("--kind", default="any", choices=["any", "z", "x"])
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", parents=[common], help="exhaustive census")
    p.add_argument("family", choices=sorted(_CENSUS))
    p.add_argument("--n", type=int, required=True, help="order (degree-4 count for biregular)")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    for name, fn, help_ in (
        ("verify-closure", cmd_verify_closure, "enumerate then reduce every class"),
        ("verify-corollary", cmd_verify_corollary, "rich-edge count on simple census members"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--connected", action="store_true")
        p.set_defaults(func=fn)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and args.what != "base" and not args.file:
        print(f"generate {args.what} needs an input file", file=sys.stderr)
        return 2
    start = time.perf_counter()
    reports = args.func(args)
    for rep in reports:
        sys.stdout.write(json.dumps(rep.as_json(), sort_keys=True) + "\n")
    bad = [r for r in reports if r.outcome != "ok"]
    tally: dict[str, int] = {}
    for r in reports:
        tally[r.outcome] = tally.get(r.outcome, 0) + 1
    print(
        f"{args.command}: {len(reports)} record(s) {tally}; {time.perf_counter() - start:.2f}s",
        file=sys.stderr,
    )
    for r in bad[:5]:
        why = r.details.get("error") or r.details.get("rule") or r.details.get("graph", "")
        print(f"  {r.outcome}: {why}", file=sys.stderr)
    return 0 if not bad else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
