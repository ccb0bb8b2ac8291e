"""Text formats: QMG v1 (native), graph6 import and DOT export."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .mgraph import LoopError, Multigraph


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_qmg(text: str) -> Multigraph:
    """Parse QMG v1: ``n=<order>`` then ``u v k`` lines; ``#`` starts a comment."""
    order: int | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            if not line.startswith("n="):
                raise ParseError(lineno, f"expected 'n=<order>', got {line!r}")
            try:
                order = int(line[2:])
            except ValueError:
                raise ParseError(lineno, f"bad order {line[2:]!r}") from None
            if order < 0:
                raise ParseError(lineno, "order must be non-negative")
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 'u v k', got {line!r}")
        try:
            u, v, k = (int(p) for p in parts)
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError(lineno, f"vertex out of range in {line!r}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if k < 1:
            raise ParseError(lineno, f"multiplicity must be >= 1 in {line!r}")
        edges.append((u, v, k))
    if order is None:
        raise ParseError(0, "missing 'n=<order>' header")
    try:
        return Multigraph(order, edges)
    except (LoopError, IndexError) as exc:  # pragma: no cover - guarded above
        raise ParseError(0, str(exc)) from exc


def format_qmg(g: Multigraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n={g.order}")
    lines.extend(f"{u} {v} {k}" for u, v, k in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(data: str | bytes) -> Multigraph:
    if isinstance(data, str):
        data = data.strip().encode()
    h = nx.from_graph6_bytes(data.strip())
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Multigraph(h.number_of_nodes(), ((mapping[u], mapping[v], 1) for u, v in h.edges()))


def format_graph6(g: Multigraph) -> str:
    if any(k > 1 for _, _, k in g.edges()):
        raise ValueError("graph6 only encodes simple graphs")
    return nx.to_graph6_bytes(g.underlying(), header=False).decode().strip()


def to_dot(g: Multigraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices())
    for u, v, k in g.edges():
        lines.extend(f"  {u} -- {v};" for _ in range(k))
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Multigraph:
    """Read a QMG file, or graph6 when the content does not look like QMG."""
    text = Path(path).read_text()
    stripped = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if stripped and not stripped[0].strip().startswith("n="):
        first = stripped[0].strip()
        if first.startswith(">>graph6<<"):
            first = first[len(">>graph6<<"):]
        try:
            return parse_graph6(first)
        except Exception:
            pass
    return parse_qmg(text)


def write_graph(g: Multigraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_qmg(g, comment))
