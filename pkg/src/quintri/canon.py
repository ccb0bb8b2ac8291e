"""Canonical labelling of multigraphs.

Equitable partition refinement on colour signatures, then a backtracking
search that individualises vertices of the first smallest non-singleton cell.
Automorphisms found at the leaves prune sibling branches.  The certificate is
the upper-triangular multiplicity listing under the best leaf labelling.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .mgraph import Multigraph


@dataclass(frozen=True)
class CanonicalForm:
    cert: str
    perm: tuple[int, ...]  # perm[v] is the canonical id of input vertex v

    def __str__(self) -> str:
        return self.cert


def labelled_certificate(g: Multigraph) -> str:
    """Serialise ``g`` exactly as labelled (no canonicalisation)."""
    n = g.order
    body = bytearray(n.to_bytes(2, "big"))
    for i in range(n):
        row = g.adj(i)
        for j in range(i + 1, n):
            k = row.get(j, 0)
            if k > 255:
                raise ValueError("multiplicities above 255 are not supported")
            body.append(k)
    return body.hex()


def _initial_cells(g: Multigraph) -> list[list[int]]:
    groups: dict[tuple, list[int]] = defaultdict(list)
    for v in g.vertices():
        key = (g.degree(v), tuple(sorted(g.adj(v).values())))
        groups[key].append(v)
    return [groups[k] for k in sorted(groups)]


def _refine(cells: list[list[int]], nbrs: list[list[tuple[int, int]]], n: int) -> list[list[int]]:
    colour = [0] * n
    while True:
        for ci, cell in enumerate(cells):
            for v in cell:
                colour[v] = ci
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple, list[int]] = defaultdict(list)
            for v in cell:
                groups[tuple(sorted((colour[w], k) for w, k in nbrs[v]))].append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                new.extend(groups[key] for key in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


class _Search:
    def __init__(self, g: Multigraph):
        self.n = g.order
        self.rows = [dict(g.adj(v)) for v in range(self.n)]
        self.nbrs = [list(g.adj(v).items()) for v in range(self.n)]
        self.best_cert: bytes | None = None
        self.best_lab: list[int] | None = None
        self.first_cert: bytes | None = None
        self.first_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def cert_of(self, lab: list[int]) -> bytes:
        rows = self.rows
        n = self.n
        out = bytearray()
        for i in range(n):
            r = rows[lab[i]]
            for j in range(i + 1, n):
                out.append(r.get(lab[j], 0))
        return bytes(out)

    def _record_auto(self, lab_a: list[int], lab_b: list[int]) -> None:
        gamma = [0] * self.n
        for i in range(self.n):
            gamma[lab_a[i]] = lab_b[i]
        if any(gamma[v] != v for v in range(self.n)):
            self.autos.append(gamma)

    def leaf(self, cells: list[list[int]]) -> None:
        lab = [c[0] for c in cells]
        cert = self.cert_of(lab)
        if self.first_cert is None:
            self.first_cert, self.first_lab = cert, lab
            self.best_cert, self.best_lab = cert, lab
            return
        if cert == self.first_cert:
            self._record_auto(self.first_lab, lab)
        elif cert == self.best_cert:
            self._record_auto(self.best_lab, lab)
        elif cert < self.best_cert:
            self.best_cert, self.best_lab = cert, lab

    def _orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def node(self, cells: list[list[int]], prefix: list[int]) -> None:
        idx = -1
        size = self.n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                idx, size = i, len(c)
        if idx < 0:
            self.leaf(cells)
            return
        target = cells[idx]
        explored: list[int] = []
        seen_autos = -1
        roots: list[int] = []
        explored_roots: set[int] = set()
        for v in target:
            if len(self.autos) != seen_autos:
                seen_autos = len(self.autos)
                roots = self._orbit_roots(prefix)
                explored_roots = {roots[u] for u in explored}
            if roots[v] in explored_roots:
                continue
            explored_roots.add(roots[v])
            explored.append(v)
            child = cells[:idx] + [[v], [w for w in target if w != v]] + cells[idx + 1:]
            self.node(_refine(child, self.nbrs, self.n), prefix + [v])


def canonical_form(g: Multigraph) -> CanonicalForm:
    n = g.order
    search = _Search(g)
    cells = _refine(_initial_cells(g), search.nbrs, n) if n else []
    if n:
        search.node(cells, [])
        lab = search.best_lab
    else:
        lab = []
    perm = [0] * n
    for pos, v in enumerate(lab):
        perm[v] = pos
    cert = n.to_bytes(2, "big") + (search.best_cert or b"")
    return CanonicalForm(cert.hex(), tuple(perm))


def certificate(g: Multigraph) -> str:
    return canonical_form(g).cert


def canonical_graph(g: Multigraph) -> Multigraph:
    return g.relabel(canonical_form(g).perm)


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.order != h.order or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in g.vertices()) != sorted(h.degree(v) for v in h.vertices()):
        return False
    return certificate(g) == certificate(h)


def graph_from_certificate(cert: str) -> Multigraph:
    raw = bytes.fromhex(cert)
    n = int.from_bytes(raw[:2], "big")
    body = raw[2:]
    edges = []
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if body[pos]:
                edges.append((i, j, body[pos]))
            pos += 1
    return Multigraph(n, edges)
