"""Exhaustive generation of small quintic, biregular and cubic graphs.

Multiplicity matrices are filled one row at a time.  Future vertices whose
columns agree on every filled row are interchangeable, so within each such
block the current row is kept non-increasing; every isomorphism class keeps a
representative under this rule.  Leaves are deduplicated by canonical form.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .canon import certificate, graph_from_certificate
from .construct import BiregularGraph
from .mgraph import Multigraph, has_triangle_property, is_connected

QUINTIC_CAP = 8


@dataclass(frozen=True)
class Census:
    order: int
    certs: tuple[str, ...]
    label: str = ""

    @property
    def count(self) -> int:
        return len(self.certs)

    def graphs(self) -> list[Multigraph]:
        return [graph_from_certificate(c) for c in self.certs]


def _regular_matrices(
    n: int,
    degree: int,
    cap: int,
    row_check: Callable[[list[list[int]], int], bool] | None = None,
    first_rows: list[list[int]] | None = None,
) -> Iterator[list[list[int]]]:
    """Yield symmetric loop-free matrices with all row sums ``degree``.

    ``row_check(M, i)`` is called once row ``i`` is complete and may prune.
    ``first_rows`` restricts row 0 to the given choices (used to split work).
    """
    mat = [[0] * n for _ in range(n)]
    rem = [degree] * n

    def rows(i: int) -> Iterator[list[list[int]]]:
        if i == n:
            yield [r[:] for r in mat]
            return
        cols = list(range(i + 1, n))
        same_block = [k > 0 and all(mat[r][cols[k]] == mat[r][cols[k - 1]] for r in range(i))
                      for k in range(len(cols))]
        need = rem[i]
        rem[i] = 0

        def fill(k: int, left: int) -> Iterator[list[list[int]]]:
            if k == len(cols):
                if left == 0 and (row_check is None or row_check(mat, i)):
                    yield from rows(i + 1)
                return
            # the remaining columns must be able to absorb what is left
            if sum(min(rem[j], cap) for j in cols[k:]) < left:
                return
            j = cols[k]
            hi = min(left, rem[j], cap)
            if same_block[k]:
                hi = min(hi, mat[i][cols[k - 1]])
            for x in range(hi, -1, -1):
                mat[i][j] = mat[j][i] = x
                rem[j] -= x
                yield from fill(k + 1, left - x)
                rem[j] += x
                mat[i][j] = mat[j][i] = 0

        if i == 0 and first_rows is not None:
            for row in first_rows:
                for j in range(1, n):
                    mat[0][j] = mat[j][0] = row[j]
                    rem[j] -= row[j]
                if row_check is None or row_check(mat, 0):
                    yield from rows(1)
                for j in range(1, n):
                    rem[j] += row[j]
                    mat[0][j] = mat[j][0] = 0
        else:
            yield from fill(0, need)
        rem[i] = need

    yield from rows(0)


def _tp_prefix(mat: list[list[int]], i: int) -> bool:
    """Edges between completed vertices must already have a common neighbour."""
    n = len(mat)
    ri = mat[i]
    for a in range(i):
        if ri[a]:
            ra = mat[a]
            if not any(ra[w] and ri[w] for w in range(n)):
                return False
    return True


def _first_rows(n: int, degree: int, cap: int) -> list[list[int]]:
    out = []

    def rec(j: int, left: int, row: list[int]) -> None:
        if j == n:
            if left == 0:
                out.append(row[:])
            return
        hi = min(left, cap, row[j - 1] if j > 1 else cap)
        for x in range(hi, -1, -1):
            row[j] = x
            rec(j + 1, left - x, row)
        row[j] = 0

    rec(1, degree, [0] * n)
    return out


def _quintic_branch(args: tuple[int, list[list[int]], bool]) -> set[str]:
    n, rows0, connected_only = args
    certs = set()
    for mat in _regular_matrices(n, 5, 4, _tp_prefix, rows0):
        g = Multigraph.from_matrix(mat)
        if not has_triangle_property(g):
            continue
        if connected_only and not is_connected(g):
            continue
        certs.add(certificate(g))
    return certs


def enumerate_quintic_tp(n: int, connected_only: bool = True, cap: int = QUINTIC_CAP, threads: int = 1) -> Census:
    """All classes of quintic triangle-property multigraphs on ``n`` vertices."""
    if n % 2:
        raise ValueError("a quintic graph must have an even number of vertices")
    if n < 0 or n > cap:
        raise ValueError(f"order {n} is above the enumeration cap {cap}")
    if n == 0:
        return Census(0, ("0000",) if not connected_only else (), "quintic-tp")
    # multiplicity 5 would isolate a pair with no triangle, so cap at 4
    branches = [(n, [row], connected_only) for row in _first_rows(n, 5, 4)]
    certs: set[str] = set()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_quintic_branch, branches):
                certs |= part
    else:
        for b in branches:
            certs |= _quintic_branch(b)
    return Census(n, tuple(sorted(certs)), "quintic-tp")


def enumerate_cubic(n: int, cap: int = 12) -> Census:
    """All connected simple cubic graphs on ``n`` vertices."""
    if n % 2:
        raise ValueError("a cubic graph must have an even number of vertices")
    if n > cap:
        raise ValueError(f"order {n} is above the enumeration cap {cap}")
    certs = set()
    if n >= 4:
        for mat in _regular_matrices(n, 3, 1):
            g = Multigraph.from_matrix(mat)
            if is_connected(g):
                certs.add(certificate(g))
    return Census(n, tuple(sorted(certs)), "cubic")


def biregular_seeds(n_a: int) -> Iterator[list[tuple[int, int, int]]]:
    """Non-decreasing lists of part-B neighbourhoods with every A-degree 4."""
    if (4 * n_a) % 3:
        raise ValueError(f"4*{n_a} is not divisible by 3")
    n_b = 4 * n_a // 3
    triples = list(combinations(range(n_a), 3))
    deg = [0] * n_a
    chosen: list[tuple[int, int, int]] = []

    def rec(start: int) -> Iterator[list[tuple[int, int, int]]]:
        if len(chosen) == n_b:
            yield list(chosen)
            return
        slots = n_b - len(chosen)
        # vertices still short of degree 4 must be reachable by the remaining triples
        if any(4 - d > slots for d in deg):
            return
        for t_idx in range(start, len(triples)):
            t = triples[t_idx]
            if any(deg[a] >= 4 for a in t):
                continue
            # vertex t[0]-1 and below are never touched again: they must be full
            if any(deg[a] != 4 for a in range(t[0])):
                break
            for a in t:
                deg[a] += 1
            chosen.append(t)
            yield from rec(t_idx)
            chosen.pop()
            for a in t:
                deg[a] -= 1
        return

    # relabel part A so that some part-B vertex sees {0, 1, 2}: it sorts first
    first = triples[0]
    for a in first:
        deg[a] += 1
    chosen.append(first)
    yield from rec(0)


def enumerate_biregular34(n_a: int) -> Census:
    """All classes of connected simple (3,4)-biregular graphs with ``n_a`` degree-4 vertices."""
    if n_a <= 0 or (4 * n_a) % 3:
        raise ValueError(f"4*{n_a} is not divisible by 3")
    certs = set()
    for seed in biregular_seeds(n_a):
        g = BiregularGraph.from_neighbourhoods(n_a, seed).as_multigraph()
        if is_connected(g):
            certs.add(certificate(g))
    return Census(n_a, tuple(sorted(certs)), "biregular34")


def biregular_from_certificate(cert: str) -> BiregularGraph:
    """Rebuild a biregular graph; degree-4 vertices form part A."""
    g = graph_from_certificate(cert)
    part_a = tuple(v for v in g.vertices() if g.degree(v) == 4)
    part_b = tuple(v for v in g.vertices() if g.degree(v) == 3)
    edges = frozenset((u, v) if u in part_a else (v, u) for u, v, _ in g.edges())
    return BiregularGraph(part_a, part_b, edges)
