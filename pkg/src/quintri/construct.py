"""Constructors: base graphs, Q(B) graphs, foundational graphs and expansions."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx

from .formats import parse_qmg
from .mgraph import Multigraph, has_triangle_property, is_quintic

# Vertex numbering: a=0, b=1, c=2, d=3, then the
# quadruple-edge pair y=4, z=5 for the two connectivity-1 graphs.
BASE_QMG = {
    "SmallBase-4a": """\
# K4 with the disjoint pairs ab and cd raised to multiplicity 3
n=4
0 1 3
2 3 3
1 2 1
1 3 1
0 3 1
0 2 1
""",
    "SmallBase-4b": """\
# K4 with the 4-cycle a-b-c-d doubled; diagonals ac and bd single
n=4
0 1 2
1 2 2
2 3 2
0 3 2
0 2 1
1 3 1
""",
    "SmallBase-6a": """\
# cut vertex a; b,c,d form a triangle of double edges; y,z a quadruple pair
n=6
0 1 1
0 2 1
0 3 1
1 2 2
2 3 2
1 3 2
0 4 1
0 5 1
4 5 4
""",
    "SmallBase-6b": """\
# cut vertex a; a-b and b-c double, c-d triple; y,z a quadruple pair
n=6
0 3 1
1 3 1
0 1 2
1 2 2
2 3 3
0 4 1
0 5 1
4 5 4
""",
}

# Line graph of K4 with a perfect matching doubled, numbered on a plane drawing:
# inner triangle 0,1,2 (angles 0,120,240), outer triangle 3,4,5 (60,180,300).
FOUNDATIONAL_6_QMG = """\
n=6
0 1 1
1 2 2
0 2 1
3 4 2
4 5 1
3 5 1
0 3 1
0 5 2
1 4 1
1 3 1
2 5 1
2 4 1
"""


class ConstructionError(ValueError):
    pass


class InvalidExpansion(ValueError):
    pass


def base_graphs() -> list[Multigraph]:
    return [parse_qmg(text) for text in BASE_QMG.values()]


def base_graph_names() -> list[str]:
    return list(BASE_QMG)


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, j, 1) for i in range(n) for j in range(i + 1, n)])


@dataclass(frozen=True)
class BiregularGraph:
    """Simple bipartite graph; part A vertices have degree 4, part B degree 3."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # (a, b) pairs

    def __post_init__(self) -> None:
        a_set, b_set = set(self.part_a), set(self.part_b)
        if a_set & b_set:
            raise ConstructionError("parts overlap")
        deg: Counter[int] = Counter()
        for a, b in self.edges:
            if a not in a_set or b not in b_set:
                raise ConstructionError(f"edge {(a, b)} does not cross the bipartition")
            deg[a] += 1
            deg[b] += 1
        if any(deg[a] != 4 for a in a_set) or any(deg[b] != 3 for b in b_set):
            raise ConstructionError("not (3,4)-biregular")

    @classmethod
    def from_neighbourhoods(cls, n_a: int, triples: Sequence[Sequence[int]]) -> "BiregularGraph":
        """Part A is ``0..n_a-1``; B vertex ``n_a+i`` is joined to ``triples[i]``."""
        part_b = tuple(range(n_a, n_a + len(triples)))
        edges = frozenset((a, n_a + i) for i, t in enumerate(triples) for a in t)
        if any(len(set(t)) != 3 for t in triples):
            raise ConstructionError("each part-B vertex needs three distinct neighbours")
        return cls(tuple(range(n_a)), part_b, edges)

    def as_multigraph(self) -> Multigraph:
        ids = {v: i for i, v in enumerate(self.part_a + self.part_b)}
        return Multigraph(len(ids), ((ids[a], ids[b], 1) for a, b in self.edges))


def complete_bipartite_34() -> BiregularGraph:
    return BiregularGraph.from_neighbourhoods(3, [(0, 1, 2)] * 4)


def q_of_biregular(bg: BiregularGraph) -> Multigraph:
    """One K4 per part-A vertex; each part-B vertex becomes a triangle."""
    block = {a: i for i, a in enumerate(sorted(bg.part_a))}
    used = Counter()
    edges: list[tuple[int, int, int]] = []
    for i in range(len(block)):
        base = 4 * i
        edges.extend((base + p, base + q, 1) for p in range(4) for q in range(p + 1, 4))
    for b in sorted(bg.part_b):
        ports = []
        for a in sorted(a for a, bb in bg.edges if bb == b):
            if used[a] >= 4:  # pragma: no cover - excluded by biregularity
                raise ConstructionError("port exhaustion")
            ports.append(4 * block[a] + used[a])
            used[a] += 1
        x, y, z = ports
        edges.extend([(x, y, 1), (y, z, 1), (x, z, 1)])
    return Multigraph(4 * len(block), edges)


def is_simple_cubic(c: Multigraph) -> bool:
    return all(k == 1 for _, _, k in c.edges()) and all(c.degree(v) == 3 for v in c.vertices())


def line_graph(c: Multigraph) -> tuple[Multigraph, list[tuple[int, int]]]:
    """Line graph of a simple graph; vertex i is the i-th edge in sorted order."""
    if any(k != 1 for _, _, k in c.edges()):
        raise ConstructionError("line graphs are only built for simple roots")
    verts = sorted((u, v) for u, v, _ in c.edges())
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if set(verts[i]) & set(verts[j]):
                edges.append((i, j, 1))
    return Multigraph(len(verts), edges), verts


def perfect_matchings(g: Multigraph) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of the underlying simple graph."""
    n = g.order
    if n % 2:
        return
    matched = [False] * n
    chosen: list[tuple[int, int]] = []

    def rec() -> Iterator[list[tuple[int, int]]]:
        try:
            u = matched.index(False)
        except ValueError:
            yield list(chosen)
            return
        matched[u] = True
        for w in sorted(g.adj(u)):
            if not matched[w]:
                matched[w] = True
                chosen.append((u, w))
                yield from rec()
                chosen.pop()
                matched[w] = False
        matched[u] = False

    yield from rec()


def find_perfect_matching(g: Multigraph) -> list[tuple[int, int]] | None:
    m = nx.max_weight_matching(g.underlying(), maxcardinality=True)
    if 2 * len(m) != g.order:
        return None
    return sorted(tuple(sorted(e)) for e in m)


def foundational_from_cubic(
    c: Multigraph, matching: Sequence[tuple[int, int]] | None = None
) -> Multigraph:
    """L(c) with the edges of a perfect matching of L(c) doubled.

    ``matching`` lists pairs of line-graph vertex ids; ``None`` picks one.
    """
    if not is_simple_cubic(c):
        raise ConstructionError("root must be a simple cubic graph")
    lg, _ = line_graph(c)
    if lg.order % 2:
        raise ConstructionError(
            f"line graph has odd order {lg.order}; root order must be a multiple of 4"
        )
    if matching is None:
        matching = find_perfect_matching(lg)
        if matching is None:
            raise ConstructionError("line graph has no perfect matching")
    covered = [v for e in matching for v in e]
    if sorted(covered) != list(range(lg.order)):
        raise ConstructionError("not a perfect matching: vertices not covered exactly once")
    if any(lg.mult(u, v) != 1 for u, v in matching):
        raise ConstructionError("matching uses a non-edge of the line graph")
    ed = lg.editor()
    for u, v in matching:
        ed.add_edge(u, v)
    return ed.freeze()[0]


def ring_of_k4s(k: int = 5) -> Multigraph:
    """``k`` K4s in a cycle, consecutive ones sharing a spoke ``i``-``k+i``."""
    if k < 4:
        raise ConstructionError("a ring needs at least four K4s to stay simple and quintic")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, k + i, 1), (i, j, 1), (k + i, k + j, 1), (i, k + j, 1), (k + i, j, 1)]
    return Multigraph(2 * k, edges)


def cube_graph() -> Multigraph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w, 1))
    return Multigraph(8, edges)


def _take(ends: Counter, part: Sequence[int], what: str) -> None:
    for w, k in Counter(part).items():
        if ends[w] < k:
            raise InvalidExpansion(f"{what}: not enough edges to {w}")
        ends[w] -= k


def _validated(g: Multigraph) -> Multigraph:
    if not is_quintic(g):
        raise InvalidExpansion("result is not quintic")
    if not has_triangle_property(g):
        raise InvalidExpansion("result lacks the triangle property")
    return g


def z_expand(
    g: Multigraph, u: int, v: int, split_u: Sequence[int], split_v: Sequence[int]
) -> Multigraph:
    """Inverse Z-reduction on non-adjacent ``u`` and ``v``.

    ``split_u`` names the two edge-ends of ``u`` (neighbours, with repetition
    for multiple edges) that move to a new centre vertex ``b``; the other three
    stay with ``u``, which becomes a tip.  Likewise ``split_v`` moves two of
    ``v``'s edge-ends to a new centre ``c``.  The diamond has tips ``u`` and
    ``v`` and central edge ``b c``; ``b = order`` and ``c = order + 1``.
    """
    if u == v or g.mult(u, v):
        raise InvalidExpansion("z_expand needs two distinct non-adjacent vertices")
    if len(split_u) != 2 or len(split_v) != 2:
        raise InvalidExpansion("each split moves exactly two edge-ends")
    _take(Counter(dict(g.adj(u))), split_u, "split_u")
    _take(Counter(dict(g.adj(v))), split_v, "split_v")
    ed = g.editor()
    b, c = ed.add_vertex(), ed.add_vertex()
    for w in split_u:
        ed.remove_edge(u, w)
        ed.add_edge(b, w)
    for w in split_v:
        ed.remove_edge(v, w)
        ed.add_edge(c, w)
    for x, y in ((u, b), (u, c), (b, c), (b, v), (c, v)):
        ed.add_edge(x, y)
    return _validated(ed.freeze()[0])


def x_expand(
    g: Multigraph, u: int, v: int, split_u: Sequence[int], split_v: Sequence[int]
) -> Multigraph:
    """Inverse X-reduction on adjacent ``u`` and ``v``.

    One ``u v`` edge is removed.  ``split_u`` moves two of ``u``'s remaining
    edge-ends to a new vertex ``b = order``; ``split_v`` moves two of ``v``'s to
    ``d = order + 1``.  Then ``u, b, v, d`` are joined into a K4.
    """
    if u == v or not g.mult(u, v):
        raise InvalidExpansion("x_expand needs two adjacent vertices")
    if len(split_u) != 2 or len(split_v) != 2:
        raise InvalidExpansion("each split moves exactly two edge-ends")
    ends_u = Counter(dict(g.adj(u)))
    ends_v = Counter(dict(g.adj(v)))
    ends_u[v] -= 1
    ends_v[u] -= 1
    _take(ends_u, split_u, "split_u")
    _take(ends_v, split_v, "split_v")
    if list(split_u).count(v) + list(split_v).count(u) > g.mult(u, v) - 1:
        raise InvalidExpansion("both splits claim the same spare u-v edge")
    ed = g.editor()
    ed.remove_edge(u, v)
    b, d = ed.add_vertex(), ed.add_vertex()
    for w in split_u:
        ed.remove_edge(u, w)
        ed.add_edge(b, w)
    for w in split_v:
        ed.remove_edge(v, w)
        ed.add_edge(d, w)
    quad = (u, b, v, d)
    for i in range(4):
        for j in range(i + 1, 4):
            ed.add_edge(quad[i], quad[j])
    return _validated(ed.freeze()[0])


def edge_ends(g: Multigraph, v: int) -> list[int]:
    return [w for w, k in sorted(g.adj(v).items()) for _ in range(k)]


@dataclass(frozen=True)
class Expansion:
    kind: str
    u: int
    v: int
    split_u: tuple[int, ...]
    split_v: tuple[int, ...]
    graph: Multigraph


def random_expansion(g: Multigraph, rng: random.Random, kind: str = "any", tries: int = 200) -> Expansion | None:
    """Sample vertex pairs and splits until an expansion validates."""
    if kind not in ("z", "x", "any"):
        raise ValueError(f"unknown expansion kind {kind!r}")
    verts = list(g.vertices())
    for _ in range(tries):
        u, v = rng.sample(verts, 2)
        adjacent = g.mult(u, v) > 0
        k = "x" if adjacent else "z"
        if kind != "any" and kind != k:
            continue
        ends_u, ends_v = edge_ends(g, u), edge_ends(g, v)
        if adjacent:
            ends_u.remove(v)
            ends_v.remove(u)
        su = tuple(rng.sample(ends_u, 2))
        sv = tuple(rng.sample(ends_v, 2))
        try:
            h = (x_expand if adjacent else z_expand)(g, u, v, su, sv)
        except InvalidExpansion:
            continue
        return Expansion(k, u, v, su, sv, h)
    return None
