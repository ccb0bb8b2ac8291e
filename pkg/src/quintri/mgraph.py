"""Loop-free undirected multigraphs and the triangle analytics built on them.

Vertices are the dense integers ``0..order-1``.  A :class:`Multigraph` is
immutable; edits go through :class:`GraphEditor`, which compacts vertex ids
when it is frozen and reports the renaming.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import networkx as nx


class LoopError(ValueError):
    """Raised when an operation would create an edge from a vertex to itself."""


class Multigraph:
    """Immutable loop-free multigraph with edge multiplicities."""

    __slots__ = ("_order", "_adj", "_hash")

    def __init__(self, order: int, edges: Iterable[tuple[int, int, int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        adj: list[dict[int, int]] = [{} for _ in range(order)]
        for u, v, k in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise IndexError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if k < 0:
                raise ValueError("multiplicity must be non-negative")
            if k == 0:
                continue
            adj[u][v] = adj[u].get(v, 0) + k
            adj[v][u] = adj[v].get(u, 0) + k
        self._order = order
        self._adj = tuple(MappingProxyType(dict(sorted(a.items()))) for a in adj)
        self._hash: int | None = None

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[int]]) -> "Multigraph":
        rows = [list(r) for r in matrix]
        n = len(rows)
        edges = []
        for u in range(n):
            if rows[u][u]:
                raise LoopError(f"loop at vertex {u}")
            for v in range(u + 1, n):
                if rows[u][v] != rows[v][u]:
                    raise ValueError("matrix is not symmetric")
                if rows[u][v]:
                    edges.append((u, v, rows[u][v]))
        return cls(n, edges)

    @property
    def order(self) -> int:
        return self._order

    def vertices(self) -> range:
        return range(self._order)

    def adj(self, v: int) -> Mapping[int, int]:
        """Neighbour -> multiplicity map of ``v`` (read-only)."""
        return self._adj[v]

    def mult(self, u: int, v: int) -> int:
        return self._adj[u].get(v, 0)

    def degree(self, v: int) -> int:
        return sum(self._adj[v].values())

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, k)`` with ``u < v`` and ``k >= 1``."""
        for u in range(self._order):
            for v, k in self._adj[u].items():
                if u < v:
                    yield u, v, k

    def edge_count(self) -> int:
        return sum(k for _, _, k in self.edges())

    def matrix(self) -> list[list[int]]:
        n = self._order
        out = [[0] * n for _ in range(n)]
        for u, v, k in self.edges():
            out[u][v] = out[v][u] = k
        return out

    def relabel(self, perm: Mapping[int, int] | list[int]) -> "Multigraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Multigraph(self._order, ((perm[u], perm[v], k) for u, v, k in self.edges()))

    def induced(self, verts: Iterable[int]) -> "Multigraph":
        vs = sorted(set(verts))
        pos = {v: i for i, v in enumerate(vs)}
        return Multigraph(
            len(vs),
            ((pos[u], pos[v], k) for u, v, k in self.edges() if u in pos and v in pos),
        )

    def underlying(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._order))
        g.add_edges_from((u, v) for u, v, _ in self.edges())
        return g

    def editor(self) -> "GraphEditor":
        return GraphEditor(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._order == other._order and all(
            dict(a) == dict(b) for a, b in zip(self._adj, other._adj)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{u}-{v}" + (f"x{k}" if k > 1 else "") for u, v, k in self.edges())
        return f"Multigraph(order={self._order}, edges=[{body}])"


class GraphEditor:
    """Mutable working copy of a multigraph.

    Vertex ids stay stable while editing; new vertices get fresh ids beyond the
    original order.  Merging two adjacent vertices turns their shared edges into
    loops, which are counted in :attr:`loops` and rejected by :meth:`freeze`.
    """

    def __init__(self, g: Multigraph | None = None):
        self.adj: dict[int, dict[int, int]] = {}
        self.loops = 0
        self._next = 0
        if g is not None:
            for v in g.vertices():
                self.adj[v] = dict(g.adj(v))
            self._next = g.order

    def add_vertex(self) -> int:
        v = self._next
        self._next += 1
        self.adj[v] = {}
        return v

    def mult(self, u: int, v: int) -> int:
        return self.adj[u].get(v, 0)

    def degree(self, v: int) -> int:
        return sum(self.adj[v].values())

    def add_edge(self, u: int, v: int, k: int = 1) -> None:
        if u == v:
            self.loops += k
            return
        self.adj[u][v] = self.adj[u].get(v, 0) + k
        self.adj[v][u] = self.adj[v].get(u, 0) + k

    def remove_edge(self, u: int, v: int, k: int = 1) -> None:
        have = self.adj[u].get(v, 0)
        if have < k:
            raise ValueError(f"cannot remove {k} copies of {u}-{v}; only {have} present")
        if have == k:
            del self.adj[u][v]
            del self.adj[v][u]
        else:
            self.adj[u][v] = have - k
            self.adj[v][u] = have - k

    def set_mult(self, u: int, v: int, k: int) -> None:
        have = self.mult(u, v)
        if k > have:
            self.add_edge(u, v, k - have)
        elif k < have:
            self.remove_edge(u, v, have - k)

    def delete_vertex(self, v: int) -> None:
        for w in self.adj.pop(v):
            del self.adj[w][v]

    def merge(self, keep: int, gone: int) -> None:
        """Identify ``gone`` with ``keep``; shared edges become loops."""
        for w, k in self.adj.pop(gone).items():
            del self.adj[w][gone]
            self.add_edge(keep, w, k)

    def freeze(self) -> tuple[Multigraph, dict[int, int]]:
        """Return the compacted graph and the old-id -> new-id renaming."""
        if self.loops:
            raise LoopError(f"{self.loops} loop(s) created")
        ids = sorted(self.adj)
        ren = {v: i for i, v in enumerate(ids)}
        edges = [
            (ren[u], ren[v], k) for u in ids for v, k in self.adj[u].items() if u < v
        ]
        return Multigraph(len(ids), edges), ren


@dataclass(frozen=True)
class Triangle:
    verts: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(set(self.verts)) != 3:
            raise ValueError("a triangle needs three distinct vertices")
        object.__setattr__(self, "verts", tuple(sorted(self.verts)))

    def edges(self) -> tuple[tuple[int, int], ...]:
        a, b, c = self.verts
        return ((a, b), (a, c), (b, c))


_LABELS = {0: "m0", 1: "m1", 2: "unsafe", 3: "aloof"}


@dataclass(frozen=True)
class TriangleClass:
    m_value: int
    label: str

    @classmethod
    def of(cls, m: int) -> "TriangleClass":
        return cls(m, _LABELS[m])


def degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.order:
        raise IndexError(f"vertex {v} out of range")
    return g.degree(v)


def is_quintic(g: Multigraph) -> bool:
    return all(g.degree(v) == 5 for v in g.vertices())


def is_simple(g: Multigraph) -> bool:
    return all(k == 1 for _, _, k in g.edges())


def common_neighbours(g: Multigraph, u: int, v: int) -> set[int]:
    a, b = g.adj(u), g.adj(v)
    if len(a) > len(b):
        a, b = b, a
    return {w for w in a if w in b}


def triangle_count_of_edge(g: Multigraph, u: int, v: int) -> int:
    """Number of triangles (as vertex sets) through the edge ``uv``."""
    if g.mult(u, v) < 1:
        raise ValueError(f"{u}-{v} is not an edge")
    return len(common_neighbours(g, u, v))


def t_of_edge(g: Multigraph, u: int, v: int) -> int:
    return triangle_count_of_edge(g, u, v)


def has_triangle_property(g: Multigraph) -> bool:
    for u, v, _ in g.edges():
        a, b = g.adj(u), g.adj(v)
        if not any(w in b for w in a):
            return False
    return True


def triangle_property_by_neighbourhoods(g: Multigraph) -> bool:
    """Neighbourhood form: no vertex of any open neighbourhood is isolated in it."""
    for v in g.vertices():
        nbrs = g.adj(v)
        for w in nbrs:
            if not any(x in nbrs for x in g.adj(w)):
                return False
    return True


def triangle_free_edges(g: Multigraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v, _ in g.edges() if not common_neighbours(g, u, v)]


def triangles(g: Multigraph) -> list[Triangle]:
    out = []
    for u, v, _ in g.edges():
        for w in g.adj(u):
            if w > v and w in g.adj(v):
                out.append(Triangle((u, v, w)))
    return out


def triangles_through(g: Multigraph, u: int, v: int) -> list[Triangle]:
    return [Triangle((u, v, w)) for w in sorted(common_neighbours(g, u, v))]


def m_of_triangle(g: Multigraph, t: Triangle) -> TriangleClass:
    for a, b in t.edges():
        if g.mult(a, b) < 1:
            raise ValueError(f"{t.verts} is not a triangle")
    m = sum(1 for a, b in t.edges() if len(common_neighbours(g, a, b)) == 1)
    return TriangleClass.of(m)


def components(g: Multigraph) -> list[list[int]]:
    return [sorted(c) for c in sorted(nx.connected_components(g.underlying()), key=min)]


def is_connected(g: Multigraph) -> bool:
    return g.order > 0 and len(components(g)) == 1


def cut_vertices(g: Multigraph) -> set[int]:
    if not is_connected(g):
        raise ValueError(f"graph is disconnected: components {components(g)}")
    return set(nx.articulation_points(g.underlying()))


def is_valid_quintic_tp(g: Multigraph) -> bool:
    return is_quintic(g) and has_triangle_property(g)


def corollary1_tally(g: Multigraph) -> tuple[int, int]:
    """Return (#edges in at least two triangles, half the order)."""
    rich = sum(1 for u, v, _ in g.edges() if len(common_neighbours(g, u, v)) >= 2)
    return rich, g.order // 2


def observation1_holds(g: Multigraph) -> bool:
    """Check the fifth-edge observation at every vertex.

    Fix a vertex ``v`` and four of its five edge-ends.  The remaining edge
    either repeats a neighbour already among the four, or goes to a vertex that
    shares a neighbour with ``v``.
    """
    for v in g.vertices():
        ends = [w for w, k in g.adj(v).items() for _ in range(k)]
        for rest in set(combinations(range(len(ends)), 4)):
            chosen = {ends[i] for i in rest}
            (last,) = [ends[i] for i in range(len(ends)) if i not in rest]
            if last in chosen:
                continue
            if not common_neighbours(g, v, last):
                return False
    return True
