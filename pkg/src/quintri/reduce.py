"""Guarded rewrites that shrink quintic triangle-property graphs, and the driver.

Every rule family yields *groups* of alternative rewrites for one matched
configuration.  A group is either ``assured`` (its guard says the rewrite must
work) or merely worth a try.  The driver applies the first alternative whose
output validates; an assured group with no valid alternative is a finding,
i.e. the guard passed but the rewrite failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence

from .canon import certificate
from .mgraph import (
    GraphEditor,
    LoopError,
    Multigraph,
    common_neighbours,
    components,
    cut_vertices,
    has_triangle_property,
    is_quintic,
)
from .rule_table import TABLE_RULES, TableRule
from .patterns import (
    BaseClass,
    ConfigMatch,
    classify_base,
    krausz_triangles,
    count_a6,
    detect_atoms,
    find_cliques,
    find_diamonds,
    find_wheels,
    match_pattern,
    Pattern,
    s_of_config,
)

RULE_IDS = (
    "CUTV", "Z", "X", "CLIQUE5", "CLIQUE4-W5NBR", "K4-SH", "PENDANT", "DEG52", "W5",
    "TE4", "TE3", "TRIPLE", "DBL3", "DBL2", "DBL1", "SIMPLE-SH", "CUT-ATOM", "A2VIA3",
    "FOUND-SHRINK",
)


class GuardViolation(Exception):
    """A Z/X guard (or a rule precondition) fired; ``codes`` names which."""

    def __init__(self, codes: Sequence[str], detail: str = ""):
        self.codes = tuple(codes)
        super().__init__(f"{'/'.join(self.codes)}: {detail}" if detail else "/".join(self.codes))


class NotApplicable(Exception):
    pass


class InconsistencyError(RuntimeError):
    """An assured rewrite failed post-validation."""

    def __init__(self, rule: str, graph: Multigraph, match: ConfigMatch, detail: str = ""):
        self.rule = rule
        self.graph = graph
        self.match = match
        super().__init__(f"{rule} on {match.as_json()}: {detail}")


class StuckError(RuntimeError):
    """A non-terminal graph admits no rewrite."""

    def __init__(self, graph: Multigraph):
        self.graph = graph
        super().__init__(f"no rule applies to non-terminal graph {certificate(graph)}")


class _Reject(Exception):
    pass


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    match: ConfigMatch
    before_cert: str
    after_cert: str
    vertex_delta: int
    variant: str = ""

    def as_json(self) -> dict:
        return {
            "rule": self.rule,
            "variant": self.variant,
            "match": self.match.as_json(),
            "before": self.before_cert,
            "after": self.after_cert,
            "vertex_delta": self.vertex_delta,
        }


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    terminals: list[BaseClass] = field(default_factory=list)
    findings: list[InconsistencyError] = field(default_factory=list)

    @property
    def terminal(self) -> BaseClass:
        return self.terminals[0] if self.terminals else BaseClass("NotTerminal")


def measure(g: Multigraph) -> tuple[int, int]:
    return (g.order, count_a6(g))


def split_components(g: Multigraph) -> list[Multigraph]:
    parts = components(g)
    if len(parts) == 1:
        return [g]
    return [g.induced(p) for p in parts]


def validate_step(before: Multigraph, after: Multigraph) -> str | None:
    """Return why ``after`` is not an acceptable rewrite of ``before``, or None."""
    if not is_quintic(after):
        return "not quintic"
    if not has_triangle_property(after):
        return "lacks the triangle property"
    top = measure(before)
    for part in split_components(after):
        if measure(part) >= top:
            return f"measure {measure(part)} does not drop below {top}"
    return None


# --- small helpers --------------------------------------------------------------


def _freeze(ed: GraphEditor) -> Multigraph:
    return ed.freeze()[0]


def _m_value(g: Multigraph, x: int, y: int, z: int) -> int:
    return sum(1 for p, q in ((x, y), (x, z), (y, z)) if len(common_neighbours(g, p, q)) == 1)


def _outside(g: Multigraph, x: int, y: int, verts: Iterable[int]) -> list[int]:
    vs = set(verts)
    return sorted(w for w in common_neighbours(g, x, y) if w not in vs)


def _externals(g: Multigraph, v: int, verts: Iterable[int]) -> list[int]:
    """Edge-ends of ``v`` leaving ``verts`` (repeated by multiplicity)."""
    vs = set(verts)
    return [w for w, k in sorted(g.adj(v).items()) if w not in vs for _ in range(k)]


def _is_full(g: Multigraph, v: int, verts: Iterable[int]) -> bool:
    vs = set(verts)
    return all(w in vs for w in g.adj(v))


def _multi_edges(g: Multigraph, avoid: Iterable[int] = ()) -> list[tuple[int, int]]:
    bad = set(avoid)
    return [(u, v) for u, v, k in g.edges() if k >= 2 and u not in bad and v not in bad]


def _attach_to_edge(ed: GraphEditor, x: int, s: int, t: int) -> None:
    """Give ``x`` two edge-ends by splitting one copy of the multiple edge ``s t``."""
    if ed.mult(s, t) < 2:
        raise _Reject("edge is not multiple")
    ed.remove_edge(s, t)
    ed.add_edge(x, s)
    ed.add_edge(x, t)


def _pair_cover(ed: GraphEditor, pool: Sequence[int]) -> None:
    """Join every pool vertex to two new vertices joined by the remaining edges."""
    if not 1 <= len(pool) <= 4:
        raise _Reject("pair cover takes one to four vertices")
    p, q = ed.add_vertex(), ed.add_vertex()
    for x in pool:
        ed.add_edge(x, p)
        ed.add_edge(x, q)
    ed.add_edge(p, q, 5 - len(pool))


def _triangle(ed: GraphEditor, x: int, y: int, z: int) -> None:
    ed.add_edge(x, y)
    ed.add_edge(y, z)
    ed.add_edge(x, z)


def _a3_block(ed: GraphEditor, r: int, left: tuple[int, int], right: tuple[int, int]) -> None:
    """Cover five deficit-2 vertices with a triangle carrying one double edge."""
    p, q = ed.add_vertex(), ed.add_vertex()
    ed.add_edge(p, q, 2)
    ed.add_edge(r, p)
    ed.add_edge(r, q)
    for hub, (x, y) in ((p, left), (q, right)):
        ed.add_edge(x, y)
        ed.add_edge(hub, x)
        ed.add_edge(hub, y)


def _triple_partitions(items: Sequence[int]) -> Iterator[list[tuple[int, int, int]]]:
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for pair in combinations(items[1:], 2):
        rest = [x for x in items[1:] if x not in pair]
        for tail in _triple_partitions(rest):
            yield [(first, *pair)] + tail


def _pool_covers(
    g: Multigraph, pool: Sequence[int], avoid: Iterable[int], limit: int = 12
) -> Iterator[tuple[str, Callable[[GraphEditor], None]]]:
    """Ways to give every pool vertex two new edge-ends.

    Aloof triangles take groups of three; ``c = len(pool) mod 3`` leftovers
    split existing multiple edges; small pools may instead use a new vertex
    pair, and five vertices an A3 block.
    """
    pool = list(pool)
    k = len(pool)
    multis = _multi_edges(g, avoid)
    emitted = 0
    if 1 <= k <= 4:
        yield "pair", lambda ed: _pair_cover(ed, pool)
    c = k % 3
    for left in combinations(pool, c):
        rest = [x for x in pool if x not in left]
        for tri in _triple_partitions(rest):
            for edges in (permutations(multis, c) if c else [()]):
                if emitted >= limit:
                    break
                emitted += 1

                def build(ed: GraphEditor, tri=tri, left=left, edges=edges) -> None:
                    for t in tri:
                        _triangle(ed, *t)
                    for x, (s, t) in zip(left, edges):
                        _attach_to_edge(ed, x, s, t)

                yield f"triangles{len(tri)}+multi{c}", build
    if 5 <= k <= 8:
        yield "pairs", lambda ed: (_pair_cover(ed, pool[:4]), _pair_cover(ed, pool[4:]))
    if k == 5:
        r = pool[0]
        yield "a3", lambda ed: _a3_block(ed, r, (pool[1], pool[2]), (pool[3], pool[4]))
    if k == 10:
        def two_a3(ed: GraphEditor) -> None:
            for blk in (pool[:5], pool[5:]):
                _a3_block(ed, blk[0], (blk[1], blk[2]), (blk[3], blk[4]))

        yield "a3x2", two_a3


# --- Z and X reductions ----------------------------------------------------------

PAIRINGS: dict[str, tuple[tuple[str, str], tuple[str, str]]] = {
    "abcd": (("a", "b"), ("c", "d")),
    "acbd": (("a", "c"), ("b", "d")),
    "adbc": (("a", "d"), ("b", "c")),
}
DIAMOND_EDGES = (("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"))
K4_EDGES = DIAMOND_EDGES + (("a", "d"),)


def _quad(m: ConfigMatch) -> tuple[dict[str, int], bool]:
    """Return a/b/c/d roles and whether the four vertices form a K4."""
    if m.kind == "diamond":
        return {r: m[r] for r in "abcd"}, bool(m.get("in_k4", False))
    vs = [v for _, v in m.roles]
    if len(vs) != 4:
        raise ValueError(f"{m.kind} match does not have four vertices")
    return dict(zip("abcd", vs)), True


def _shared(ed: GraphEditor, u: int, v: int) -> bool:
    return any(w in ed.adj[v] for w in ed.adj[u] if w not in (u, v))


def contraction_guards(
    g: Multigraph, roles: dict[str, int], k4: bool, pairing: str, kind: str
) -> list[str]:
    """Codes of the Z (kind 'Z') or X (kind 'X') guards that fire."""
    pairs = PAIRINGS[pairing]
    skeleton = K4_EDGES if k4 else DIAMOND_EDGES
    cross = [e for e in skeleton if e not in pairs and e[::-1] not in pairs]
    verts = set(roles.values())
    codes = []
    if any(g.mult(roles[x], roles[y]) > 1 for x, y in pairs):
        codes.append(f"{kind}1")
    for x, y in pairs:
        u, v = roles[x], roles[y]
        if any(_m_value(g, u, v, w) == 2 for w in _outside(g, u, v, verts)):
            codes.append(f"{kind}2")
            break
    # the written conditions over-approximate; each is confirmed on the
    # contracted graph so a guard never blocks a rewrite that would validate
    ed = contract(g, roles, k4, pairing)
    image = {roles[y]: roles[x] for x, y in pairs}
    if kind == "Z":
        # triangles through a configuration edge die with it, so m(T) is read
        # in the graph without those edges
        bare = g.editor()
        for x, y in skeleton:
            bare.remove_edge(roles[x], roles[y])
        stranded = {
            (image.get(s, s), w)
            for x, y in cross
            for w in _outside(g, roles[x], roles[y], verts)
            for s in (roles[x], roles[y])
            if not _shared(bare, s, w)
        }
        if any(not _shared(ed, s, w) for s, w in stranded):
            codes.append("Z3")
    else:
        (p1, _), (q1, _) = pairs
        lonely = not any(_outside(g, roles[x], roles[y], verts) for x, y in cross)
        if lonely and not _shared(ed, roles[p1], roles[q1]):
            codes.append("X3")
    return codes


def contract(g: Multigraph, roles: dict[str, int], k4: bool, pairing: str) -> GraphEditor:
    """Delete one copy of each configuration edge and identify the two pairs."""
    pairs = PAIRINGS[pairing]
    ed = g.editor()
    for x, y in K4_EDGES if k4 else DIAMOND_EDGES:
        ed.remove_edge(roles[x], roles[y])
    (p1, p2), (q1, q2) = pairs
    ed.merge(roles[p1], roles[p2])
    ed.merge(roles[q1], roles[q2])
    if k4:
        ed.add_edge(roles[p1], roles[q1])
    return ed


def z_reduce(g: Multigraph, d: ConfigMatch, pairing: str = "abcd", force: bool = False) -> Multigraph:
    """Z-reduction of a diamond; ``pairing`` 'abcd' merges a~b, c~d and 'acbd' a~c, b~d.

    Guards are checked first and raise :class:`GuardViolation`.  With ``force``
    the rewrite runs regardless, raising :class:`LoopError` if a loop forms.
    """
    if d.kind != "diamond" or pairing not in ("abcd", "acbd"):
        raise ValueError("z_reduce needs a diamond match and pairing 'abcd' or 'acbd'")
    roles, k4 = _quad(d)
    if k4:
        raise ValueError("diamond lies inside a K4; use x_reduce")
    pairs = PAIRINGS[pairing]
    for x, y in DIAMOND_EDGES:
        if (x, y) not in pairs and g.mult(roles[x], roles[y]) > 1:
            raise ValueError(f"diamond edge {x}{y} is multiple; use x_reduce")
    if not force:
        codes = contraction_guards(g, roles, False, pairing, "Z")
        if codes:
            raise GuardViolation(codes, f"diamond {roles}")
    return _freeze(contract(g, roles, False, pairing))


def x_reduce(g: Multigraph, m: ConfigMatch, pairing: str = "abcd", force: bool = False) -> Multigraph:
    """X-reduction of a K4 (any of three pairings) or of a diamond with a multiple cross edge."""
    roles, k4 = _quad(m)
    if pairing not in PAIRINGS or (not k4 and pairing == "adbc"):
        raise ValueError(f"bad pairing {pairing!r} for {m.kind}")
    if not k4:
        pairs = PAIRINGS[pairing]
        cross = [e for e in DIAMOND_EDGES if e not in pairs]
        if not any(g.mult(roles[x], roles[y]) > 1 for x, y in cross):
            raise ValueError("diamond has no multiple edge outside the contracted pairs; use z_reduce")
    if not force:
        codes = contraction_guards(g, roles, k4, pairing, "X")
        if codes:
            raise GuardViolation(codes, f"{m.kind} {roles}")
    return _freeze(contract(g, roles, k4, pairing))


# --- rule groups -------------------------------------------------------------------

Build = Callable[[], Multigraph]


@dataclass
class Group:
    rule: str
    match: ConfigMatch
    assured: bool
    alts: list[tuple[str, Build]]


def _edit(g: Multigraph, fn: Callable[[GraphEditor], None]) -> Build:
    def build() -> Multigraph:
        ed = g.editor()
        fn(ed)
        return _freeze(ed)

    return build


def _quad_pairings(k4: bool) -> tuple[str, ...]:
    return ("abcd", "acbd", "adbc") if k4 else ("abcd", "acbd")


def _contraction_group(g: Multigraph, rule: str, m: ConfigMatch, pairing: str) -> Group:
    roles, k4 = _quad(m)
    pairs = PAIRINGS[pairing]
    multi_cross = any(
        g.mult(roles[x], roles[y]) > 1 for x, y in DIAMOND_EDGES if (x, y) not in pairs
    )
    kind = "X" if k4 or multi_cross else "Z"
    codes = contraction_guards(g, roles, k4, pairing, kind)
    build = lambda: _freeze(contract(g, roles, k4, pairing))  # noqa: E731
    return Group(rule, m, not codes and not (not k4 and _crowded(g, roles.values())), [(f"{kind}:{pairing}", build)])


def _crowded(g: Multigraph, verts: Iterable[int]) -> bool:
    """Some outside vertex sees three vertices of the configuration."""
    vs = set(verts)
    seen: dict[int, int] = {}
    for v in vs:
        for w in g.adj(v):
            if w not in vs:
                seen[w] = seen.get(w, 0) + 1
    return any(k >= 3 for k in seen.values())


# cut vertices -------------------------------------------------------------------


def _sides(g: Multigraph, v: int) -> tuple[list[int], list[int]] | None:
    """Split ``G - v`` into the side with three edge-ends from ``v`` and the side with two."""
    rest = g.induced([w for w in g.vertices() if w != v])
    others = [w for w in g.vertices() if w != v]
    parts = [[others[i] for i in comp] for comp in components(rest)]
    if len(parts) != 2:
        return None
    ends = [sum(g.mult(v, w) for w in p) for p in parts]
    if sorted(ends) != [2, 3]:
        return None
    return (parts[0], parts[1]) if ends[0] == 3 else (parts[1], parts[0])


def _cap_a4(ed: GraphEditor, v: int) -> None:
    y, z = ed.add_vertex(), ed.add_vertex()
    ed.add_edge(v, y)
    ed.add_edge(v, z)
    ed.add_edge(y, z, 4)


def _cap_a10(ed: GraphEditor, v: int) -> None:
    b, c, d = ed.add_vertex(), ed.add_vertex(), ed.add_vertex()
    for w in (b, c, d):
        ed.add_edge(v, w)
    ed.add_edge(b, c, 2)
    ed.add_edge(c, d, 2)
    ed.add_edge(b, d, 2)


def _cap_a11(ed: GraphEditor, v: int) -> None:
    b, c, d = ed.add_vertex(), ed.add_vertex(), ed.add_vertex()
    ed.add_edge(v, b, 2)
    ed.add_edge(v, d)
    ed.add_edge(b, c, 2)
    ed.add_edge(c, d, 3)
    ed.add_edge(b, d)


def _split_at(g: Multigraph, v: int, s2: Sequence[int], cap3: Callable[[GraphEditor, int], None]) -> Build:
    def fn(ed: GraphEditor) -> None:
        v2 = ed.add_vertex()
        for w in s2:
            k = ed.mult(v, w)
            if k:
                ed.remove_edge(v, w, k)
                ed.add_edge(v2, w, k)
        _cap_a4(ed, v)
        cap3(ed, v2)

    return _edit(g, fn)


def _drop_pendant_block(g: Multigraph, v: int, s3: list[int], s2: list[int]) -> list[tuple[str, Build]]:
    """Pendant three-vertex block at ``v``: remove it and patch the two stubs."""
    stubs = [w for w in g.adj(v) if w in set(s2)]
    if len(stubs) != 2 or any(g.mult(v, w) != 1 for w in stubs):
        return []
    y, z = stubs
    if not g.mult(y, z):
        return []
    gone = [v, *s3]

    def parallel(ed: GraphEditor) -> None:
        for w in gone:
            ed.delete_vertex(w)
        ed.add_edge(y, z)

    def a7(ed: GraphEditor) -> None:
        for w in gone:
            ed.delete_vertex(w)
        ed.remove_edge(y, z)
        c, d = ed.add_vertex(), ed.add_vertex()
        ed.add_edge(c, d, 3)
        for s in (y, z):
            ed.add_edge(s, c)
            ed.add_edge(s, d)

    alts = []
    if len(common_neighbours(g, y, z)) >= 2:
        alts.append(("parallel", _edit(g, parallel)))
    alts.append(("a7", _edit(g, a7)))
    return alts


def _drop_quadruple_block(g: Multigraph, u: int, s3: list[int], s2: list[int]) -> list[tuple[str, Build]]:
    """Pendant quadruple-edge block at ``u``: the case analysis on ``u``'s other side."""
    y, z = s2
    if g.mult(y, z) != 4:
        return []
    side = set(s3)
    nb = {w: k for w, k in g.adj(u).items() if w in side}
    alts: list[tuple[str, Build]] = []

    if sorted(nb.values()) == [1, 2]:
        big = next(w for w, k in nb.items() if k == 2)
        small = next(w for w, k in nb.items() if k == 1)
        vw = g.mult(big, small)
        others = {w: k for w, k in g.adj(big).items() if w not in (u, small)}

        if vw == 1 and not (common_neighbours(g, big, small) - {u}):
            def contract_vw(ed: GraphEditor) -> None:
                for w in (u, y, z):
                    ed.delete_vertex(w)
                ed.remove_edge(big, small)
                ed.merge(big, small)

            alts.append(("contract", _edit(g, contract_vw)))
        if vw == 1 and sorted(others.values()) == [1, 1]:
            c, e = sorted(others)
            if g.mult(c, small) and g.mult(e, small):
                def case_a(ed: GraphEditor, c=c, e=e) -> None:
                    ed.delete_vertex(u)
                    ed.delete_vertex(big)
                    ed.add_edge(small, y)
                    ed.add_edge(small, z)
                    ed.add_edge(c, e)

                alts.append(("double-a", _edit(g, case_a)))
            for c, e in ((c, e), (e, c)):
                if g.mult(c, small) and not g.mult(e, small):
                    def case_c(ed: GraphEditor, c=c, e=e) -> None:
                        for w in (u, big, y, z):
                            ed.delete_vertex(w)
                        ed.add_edge(small, c)
                        ed.add_edge(small, e)

                    alts.append(("double-c", _edit(g, case_c)))
        if vw == 2:
            def case_b(ed: GraphEditor) -> None:
                ed.delete_vertex(y)
                ed.delete_vertex(z)
                ed.add_edge(u, big)
                ed.add_edge(u, small)
                ed.remove_edge(big, small)

            alts.append(("double-b", _edit(g, case_b)))
        if vw == 1 and list(others.values()) == [2]:
            (c,) = others

            def case_d(ed: GraphEditor, c=c) -> None:
                ed.delete_vertex(y)
                ed.delete_vertex(z)
                ed.add_edge(u, big)
                ed.remove_edge(big, c)
                ed.add_edge(u, c)

            alts.append(("double-d", _edit(g, case_d)))

    elif sorted(nb.values()) == [1, 1, 1]:
        trio = sorted(nb)
        for q in trio:
            p, r = [w for w in trio if w != q]
            if not (g.mult(p, q) and g.mult(q, r)):
                continue
            if g.mult(p, r):
                for x1, x2 in ((p, q), (q, r), (p, r)):
                    def swap(ed: GraphEditor, x1=x1, x2=x2) -> None:
                        ed.delete_vertex(y)
                        ed.delete_vertex(z)
                        ed.remove_edge(x1, x2)
                        ed.add_edge(u, x1)
                        ed.add_edge(u, x2)

                    alts.append((f"single-a:{x1}{x2}", _edit(g, swap)))
            else:
                diamond = ConfigMatch.make("diamond", {"a": p, "b": u, "c": q, "d": r}, in_k4=False)
                shrink = x_reduce if max(g.mult(p, q), g.mult(q, r)) > 1 else z_reduce
                for pairing in ("abcd", "acbd"):
                    alts.append((
                        f"single-c:{pairing}",
                        lambda pairing=pairing, diamond=diamond, shrink=shrink: shrink(g, diamond, pairing),
                    ))
            alts.extend(_cut_single_delete_q(g, u, y, z, p, q, r))
            alts.extend(_cut_single_delete_q(g, u, y, z, r, q, p))
        if len({(a, b) for a, b in combinations(trio, 2) if g.mult(a, b)}) == 3:
            def wipe(ed: GraphEditor) -> None:
                for w in (u, *trio, y, z):
                    ed.delete_vertex(w)
                deficit = {w: 5 - ed.degree(w) for w in ed.adj if ed.degree(w) < 5}
                if sorted(deficit.values()) != [2, 2, 2]:
                    raise _Reject("outer vertices are not three distinct stubs")
                _triangle(ed, *deficit)

            alts.append(("single-b:triangle", _edit(g, wipe)))
    return alts


def _cut_single_delete_q(g: Multigraph, u: int, y: int, z: int, p: int, q: int, r: int) -> list[tuple[str, Build]]:
    """Delete ``u`` and the middle vertex ``q``, rerouting ``q``'s outer edges crosswise."""
    alts: list[tuple[str, Build]] = []
    outer = {w: k for w, k in g.adj(q).items() if w not in (u, p, r)}
    mpq, mqr, mpr = g.mult(p, q), g.mult(q, r), g.mult(p, r)
    if mpq == 2 and mqr == 2 and not mpr:
        def case_d(ed: GraphEditor) -> None:
            ed.delete_vertex(u)
            ed.delete_vertex(q)
            ed.add_edge(p, r)
            for s in (p, r):
                ed.add_edge(s, y)
                ed.add_edge(s, z)
            ed.remove_edge(y, z)

        alts.append(("single-d", _edit(g, case_d)))
    if mpq == 1 and mqr == 2 and not mpr and list(outer.values()) == [1]:
        (e,) = outer
        # listed with e ~ p; the mirrored wiring covers e ~ r
        for near, far in ((p, r), (r, p)):
            if not g.mult(near, e):
                continue

            def case_e(ed: GraphEditor, e=e, far=far) -> None:
                for w in (u, q, y, z):
                    ed.delete_vertex(w)
                ed.add_edge(p, r, 2)
                ed.add_edge(far, e)

            alts.append(("single-e", _edit(g, case_e)))
    if mpq == 1 and mqr == 1 and sum(outer.values()) == 2:
        ends = [w for w, k in sorted(outer.items()) for _ in range(k)]
        # written for e ~ p and f ~ r; other assignments are left to validation
        for e, f in sorted(set(permutations(ends))):
            def case_f(ed: GraphEditor, e=e, f=f) -> None:
                for w in (u, q, y, z):
                    ed.delete_vertex(w)
                ed.add_edge(p, r)
                ed.add_edge(r, e)
                ed.add_edge(p, f)

            alts.append(("single-f" if not mpr else "single-b", _edit(g, case_f)))
    if mpq == 1 and mqr == 1 and not mpr and sorted(outer.values()) == [1, 1]:
        e, f = sorted(outer)

        # not among the listed cases: only one of p, r meets q in an outside triangle
        def extra(ed: GraphEditor) -> None:
            for w in (u, q, y, z):
                ed.delete_vertex(w)
            ed.add_edge(p, r, 2)
            ed.add_edge(e, f)

        alts.append(("single-extra", _edit(g, extra)))
    return alts


def cut_vertex_reduce(g: Multigraph, v: int) -> list[tuple[str, Multigraph]]:
    """All valid rewrites at cut vertex ``v`` (split, pendant-block or quadruple-pendant)."""
    if v not in cut_vertices(g):
        raise NotApplicable(f"{v} is not a cut vertex")
    out = []
    for grp in _cut_groups(g, [v]):
        for name, build in grp.alts:
            try:
                h = build()
            except (_Reject, LoopError, GuardViolation, ValueError):
                continue
            if validate_step(g, h) is None:
                out.append((f"{grp.rule}:{name}", h))
    if not out:
        sides = _sides(g, v)
        if sides and len(sides[0]) == 3 and len(sides[1]) == 2:
            raise NotApplicable("graph is a terminal connectivity-1 base graph")
        raise NotApplicable(f"no cut-vertex rewrite validates at {v}")
    return out


def _cut_groups(g: Multigraph, verts: Iterable[int]) -> Iterator[Group]:
    for v in sorted(verts):
        sides = _sides(g, v)
        if sides is None:
            continue
        s3, s2 = sides
        match = ConfigMatch.make("cutv-2-3", {"v": v}, three_side=tuple(s3), two_side=tuple(s2))
        if len(s3) > 3 and len(s2) > 2:
            yield Group("CUTV", match, True, [
                ("split:a10", _split_at(g, v, s2, _cap_a10)),
                ("split:a11", _split_at(g, v, s2, _cap_a11)),
            ])
        elif len(s3) == 3 and len(s2) > 2:
            yield Group("CUT-ATOM", match, True, _drop_pendant_block(g, v, s3, s2))
        elif len(s2) == 2 and len(s3) > 3:
            qmatch = ConfigMatch.make("cutv-quadruple", {"v": v, "y": s2[0], "z": s2[1]})
            yield Group("CUT-ATOM", qmatch, True, _drop_quadruple_block(g, v, s3, s2))


def cut_groups(g: Multigraph) -> Iterator[Group]:
    cuts = cut_vertices(g)
    if cuts:
        yield from _cut_groups(g, cuts)


# cliques --------------------------------------------------------------------------


def _k4_context(g: Multigraph, m: ConfigMatch, k5_sets: set[frozenset[int]]) -> str:
    verts = m.vertices
    if g.order == 6 and any(len(s) == 6 for s in k5_sets):
        return "X"
    if any(verts < s for s in k5_sets):
        return "CLIQUE5"
    for w in g.vertices():
        if w not in verts and sum(1 for x in verts if g.mult(w, x)) >= 3:
            return "CLIQUE4-W5NBR"
    return "K4-SH"


def _three_attached(g: Multigraph, verts: frozenset[int]) -> bool:
    return any(
        w not in verts and sum(1 for x in verts if g.mult(w, x)) >= 3 for w in g.vertices()
    )


def _ident23_groups(g: Multigraph, m: ConfigMatch, quiet: bool) -> Iterator[Group]:
    """Delete the full vertices of a K4 with double edges and identify two stubs."""
    verts = m.vertices
    clean = quiet and not _three_attached(g, verts) and 1 <= s_of_config(g, ConfigMatch.make("K4", m.map)) <= 2
    for c in sorted(verts):
        for a, b in combinations(sorted(verts - {c}), 2):
            (d,) = verts - {a, b, c}
            # two double edges ca, cb; e hangs off ab
            if g.mult(c, a) == 2 and g.mult(c, b) == 2 and all(
                g.mult(x, y) == 1 for x, y in ((a, b), (a, d), (b, d), (c, d))
            ):
                for e in _outside(g, a, b, verts):
                    if g.mult(d, e) or not all(_is_full(g, x, verts | {e}) for x in (a, b, c)):
                        continue
                    unsafe = _m_value(g, a, b, e) == 2

                    def two_doubles(ed: GraphEditor, a=a, b=b, c=c, d=d, e=e) -> None:
                        for x in (a, b, c):
                            ed.delete_vertex(x)
                        ed.merge(d, e)

                    match = ConfigMatch.make("K4", {"a": a, "b": b, "c": c, "d": d, "e": e})
                    yield Group("K4-SH", match, clean and unsafe, [("ident23:two-doubles", _edit(g, two_doubles))])
    for a, b in permutations(sorted(verts), 2):
        if a > b or g.mult(a, b) != 2:
            continue
        for c in sorted(verts - {a, b}):
            (e,) = verts - {a, b, c}
            if not all(g.mult(x, y) == 1 for x, y in combinations((a, b, c, e), 2) if {x, y} != {a, b}):
                continue
            for ab, ba in ((a, b), (b, a)):
                for d in _outside(g, ab, c, verts):
                    for f in _outside(g, ba, c, verts):
                        if d == f or g.mult(e, f):
                            continue
                        if not all(_is_full(g, x, verts | {d, f}) for x in (a, b, c)):
                            continue
                        unsafe = _m_value(g, ab, c, d) == 2 and _m_value(g, ba, c, f) == 2

                        def one_double(ed: GraphEditor, a=ab, b=ba, c=c, e=e, f=f) -> None:
                            ed.delete_vertex(b)
                            ed.remove_edge(a, e)
                            ed.remove_edge(c, e)
                            ed.remove_edge(c, f)
                            ed.add_edge(a, c, 3)
                            ed.merge(e, f)

                        match = ConfigMatch.make("K4", {"a": ab, "b": ba, "c": c, "e": e, "u1": d, "u2": f})
                        yield Group("K4-SH", match, clean and unsafe, [("ident23:one-double", _edit(g, one_double))])


def _pendants(g: Multigraph, verts: frozenset[int]) -> list[tuple[int, int, int]] | None:
    """Pendant triangles ``(h, x, y)`` at the non-full vertices of an isolated K4."""
    out = []
    for h in sorted(verts):
        ext = _externals(g, h, verts)
        if not ext:
            continue
        if len(ext) != 2 or ext[0] == ext[1] or not g.mult(ext[0], ext[1]):
            return None
        out.append((h, ext[0], ext[1]))
    return out


def _pendant_groups(g: Multigraph, m: ConfigMatch) -> Iterator[Group]:
    verts = m.vertices
    if s_of_config(g, ConfigMatch.make("K4", m.map)) != 0:
        return
    pend = _pendants(g, verts)
    if not pend:
        return
    aloof = sum(1 for t in pend if _m_value(g, *t) == 3)
    if aloof == 4:
        return
    full_count = sum(1 for h in verts if _is_full(g, h, verts))
    match = ConfigMatch.make("A5" if full_count == 2 else "A2", m.map, aloof=aloof)
    grp = delete_with_pendants(g, verts, "PENDANT", match, full_count == 2 or aloof <= 3)
    if grp is not None:
        yield grp


def delete_with_pendants(
    g: Multigraph, verts: frozenset[int], rule: str, match: ConfigMatch, assured: bool
) -> Group | None:
    """Delete ``verts``; every boundary vertex must carry one pendant triangle.

    Unsafe pendant edges are doubled, aloof ones dropped and their ends
    re-covered from the pool of deficit-2 vertices.
    """
    pend = _pendants(g, verts)
    if not pend:
        return None
    aloof = [(h, x, y) for h, x, y in pend if _m_value(g, h, x, y) == 3]
    unsafe = [(h, x, y) for h, x, y in pend if (h, x, y) not in aloof]
    pool = [v for _, x, y in aloof for v in (x, y)]
    if len(set(pool)) != len(pool):
        return None
    touched = set(verts) | {v for t in pend for v in t}

    def strip(ed: GraphEditor) -> None:
        for h in verts:
            ed.delete_vertex(h)
        for _, x, y in unsafe:
            ed.add_edge(x, y)
        for _, x, y in aloof:
            ed.remove_edge(x, y)

    alts = []
    for name, cover in _pool_covers(g, pool, touched):
        if name.startswith("triangles") and len(pool) % 3:
            continue

        def fn(ed: GraphEditor, cover=cover) -> None:
            strip(ed)
            cover(ed)

        alts.append((f"pendant:{name}", _edit(g, fn)))
    if not pool:
        alts.insert(0, ("pendant:unsafe", _edit(g, strip)))
    return Group(rule, match, assured and bool(alts), alts)


def clique_groups(g: Multigraph) -> Iterator[Group]:
    k4s = find_cliques(g, 4)
    if not k4s:
        return
    k5_sets = {c.vertices for c in find_cliques(g, 5)} | {c.vertices for c in find_cliques(g, 6)}
    for m in k4s:
        rule = _k4_context(g, m, k5_sets)
        for pairing in _quad_pairings(True):
            yield _contraction_group(g, rule, m, pairing)
    quiet = not k5_sets
    for m in k4s:
        yield from _ident23_groups(g, m, quiet)
    for m in k4s:
        yield from _pendant_groups(g, m)


# degree 5/2 configurations ------------------------------------------------------------


def deg52_reduce(g: Multigraph, verts: Iterable[int], limit: int = 12) -> list[tuple[str, Multigraph]]:
    """Delete the full vertices of ``verts`` and re-cover the degree-2 ones."""
    grp = _deg52_group(g, frozenset(verts), "custom", limit)
    if grp is None:
        raise NotApplicable("configuration vertices are not all of degree 5 or 2")
    if not grp.alts:
        raise GuardViolation(["DEG52"], "leftover vertices need multiple edges outside the configuration")
    out = []
    for name, build in grp.alts:
        try:
            h = build()
        except (_Reject, LoopError, ValueError):
            continue
        if validate_step(g, h) is None:
            out.append((name, h))
    return out


def _deg52_group(g: Multigraph, verts: frozenset[int], kind: str, limit: int = 12) -> Group | None:
    inner = {v: sum(k for w, k in g.adj(v).items() if w in verts) for v in verts}
    if any(d not in (2, 5) for d in inner.values()):
        return None
    full = [v for v, d in inner.items() if d == 5]
    if not full or any(not _is_full(g, v, verts) for v in full):
        return None
    pool = sorted(v for v, d in inner.items() if d == 2)
    twos_adjacent = any(g.mult(x, y) for x, y in combinations(pool, 2))
    alts = []
    for name, cover in _pool_covers(g, pool, verts, limit):
        if name in ("pair", "a3"):
            continue

        def fn(ed: GraphEditor, cover=cover) -> None:
            for v in full:
                ed.delete_vertex(v)
            for x, y in combinations(pool, 2):
                if ed.mult(x, y):
                    ed.remove_edge(x, y, ed.mult(x, y))
            cover(ed)

        alts.append((f"deg52:{name}", _edit(g, fn)))
    match = ConfigMatch.make(kind, {f"v{i}": v for i, v in enumerate(sorted(verts))})
    return Group("DEG52", match, not twos_adjacent and bool(alts), alts)


def deg52_groups(g: Multigraph, kinds: Sequence[str]) -> Iterator[Group]:
    for m in detect_atoms(g, kinds):
        grp = _deg52_group(g, m.vertices, m.kind)
        if grp is not None and grp.alts:
            yield grp


def te4_groups(g: Multigraph) -> Iterator[Group]:
    """Trade an A6 for a triangle and a quadruple-edge pendant (order unchanged)."""
    for m in detect_atoms(g, ["A6"]):
        vs = [m[f"v{i}"] for i in range(1, 5)]
        alts = []
        for apex in vs:
            rest = [v for v in vs if v != apex]

            def fn(ed: GraphEditor, apex=apex, rest=rest) -> None:
                ed.delete_vertex(m["u1"])
                ed.delete_vertex(m["u2"])
                _triangle(ed, *rest)
                _cap_a4(ed, apex)

            alts.append((f"te4:apex{apex}", _edit(g, fn)))
        yield Group("TE4", m, False, alts)


# diamonds ---------------------------------------------------------------------------


def _diamond_label(g: Multigraph, d: ConfigMatch, wheel_sets: list[frozenset[int]], multi: bool) -> str:
    verts = d.vertices
    if any(verts <= w for w in wheel_sets):
        return "W5"
    if any(g.mult(x, y) >= 3 for x, y in combinations(verts, 2)):
        return "TRIPLE"
    if len(common_neighbours(g, d["b"], d["c"])) >= 3:
        return "TE3"
    return "X" if multi else "Z"


def diamond_groups(g: Multigraph) -> Iterator[Group]:
    wheels = [w.vertices for w in find_wheels(g, 4)]
    for d in find_diamonds(g):
        for pairing in ("abcd", "acbd"):
            roles, _ = _quad(d)
            pairs = PAIRINGS[pairing]
            multi = any(g.mult(roles[x], roles[y]) > 1 for x, y in DIAMOND_EDGES if (x, y) not in pairs)
            yield _contraction_group(g, _diamond_label(g, d, wheels, multi), d, pairing)


# A2 via A3 --------------------------------------------------------------------------


def a2_via_a3_groups(g: Multigraph) -> Iterator[Group]:
    for m in find_cliques(g, 4):
        verts = m.vertices
        if any(g.mult(x, y) != 1 for x, y in combinations(verts, 2)):
            continue
        pend = _pendants(g, verts)
        if pend is None or len(pend) != 4:
            continue
        if any(_m_value(g, h, x, y) != 3 for h, x, y in pend):
            continue
        alts = []
        for order in permutations(range(4)):
            if order[0] > order[1]:
                continue
            pa, pb, pc, pd = (pend[i] for i in order)
            for c1, c2 in ((pc[1], pc[2]), (pc[2], pc[1])):
                def fn(ed: GraphEditor, pa=pa, pb=pb, pd=pd, c1=c1, c2=c2) -> None:
                    for h in verts:
                        ed.delete_vertex(h)
                    ed.remove_edge(c1, c2)
                    a, b = ed.add_vertex(), ed.add_vertex()
                    ed.add_edge(a, b, 2)
                    for hub, (_, x, y) in ((a, pa), (b, pb)):
                        ed.add_edge(hub, x)
                        ed.add_edge(hub, y)
                        ed.add_edge(hub, c1)
                    ed.add_edge(c2, pd[1])
                    ed.add_edge(c2, pd[2])

                alts.append((f"a2via3:{order}:{c1}", _edit(g, fn)))
                if len(alts) >= 6:
                    break
            if len(alts) >= 6:
                break
        yield Group("A2VIA3", ConfigMatch.make("A2", m.map), True, alts)


# table-driven rules -------------------------------------------------------------------


def _parse_lhs(rule_def: TableRule) -> Pattern:
    edges, at_least = {}, {}
    for tok in rule_def.lhs.split():
        pair, _, k = tok.partition(":")
        a, b = pair.split("-")
        if k.endswith("+"):
            at_least[(a, b)] = int(k[:-1])
        else:
            edges[(a, b)] = int(k or 1)
    return Pattern(rule_def.name, edges, frozenset(rule_def.full.split()), at_least=at_least, induced=False)


_TABLE_PATTERNS: dict[str, Pattern] = {}


def _table_pattern(rule_def: TableRule) -> Pattern:
    key = f"{rule_def.rule}/{rule_def.name}"
    if key not in _TABLE_PATTERNS:
        _TABLE_PATTERNS[key] = _parse_lhs(rule_def)
    return _TABLE_PATTERNS[key]


def _run_ops(ed: GraphEditor, ops: str, env: dict[str, int]) -> None:
    env = dict(env)
    for op in filter(None, (o.strip() for o in ops.split(";"))):
        verb, *args = op.split()
        if verb == "del":
            for r in args:
                ed.delete_vertex(env[r])
        elif verb in ("add", "sub"):
            a, b = args[0].split("-")
            k = int(args[1]) if len(args) > 1 else 1
            if verb == "add":
                ed.add_edge(env[a], env[b], k)
            else:
                ed.remove_edge(env[a], env[b], k)
        elif verb == "merge":
            ed.merge(env[args[0]], env[args[1]])
        elif verb == "contract":
            vs = [env[r] for r in args]
            for x, y in combinations(vs, 2):
                k = ed.mult(x, y)
                if k:
                    ed.remove_edge(x, y, k)
            for y in vs[1:]:
                ed.merge(vs[0], y)
        elif verb == "new":
            env[args[0]] = ed.add_vertex()
        elif verb == "cap":
            _cap_a4(ed, env[args[0]])
        else:  # pragma: no cover - catalogue typo
            raise ValueError(f"unknown operation {verb!r}")


def _induced_match(g: Multigraph, p: Pattern, env: dict[str, int]) -> bool:
    for r, s in combinations(env, 2):
        if p.requirement(r, s) is None and g.mult(env[r], env[s]):
            return False
    return True


def _needs_hold(g: Multigraph, rule_def: TableRule, env: dict[str, int]) -> bool:
    inside = set(env.values())
    for cond in rule_def.need:
        word, x, y = cond.split()
        if word == "common" and not _outside(g, env[x], env[y], inside):
            return False
    return True


def table_groups(g: Multigraph, rules: Sequence[str], per_set: int = 6) -> Iterator[Group]:
    """Groups for every catalogue entry of the given families, in catalogue order."""
    for rule_def in TABLE_RULES:
        if rule_def.rule not in rules:
            continue
        p = _table_pattern(rule_def)
        by_set: dict[frozenset[int], list[dict[str, int]]] = {}
        for env in match_pattern(g, p):
            lst = by_set.setdefault(frozenset(env.values()), [])
            if len(lst) < per_set:
                lst.append(env)
        for envs in by_set.values():
            alts = []
            assured = False
            for env in envs:
                if rule_def.assured and _induced_match(g, p, env) and _needs_hold(g, rule_def, env):
                    assured = True
                for i, ops in enumerate(rule_def.alts):
                    alts.append((f"{rule_def.name}:{i}", _edit(g, lambda ed, ops=ops, env=env: _run_ops(ed, ops, env))))
            yield Group(rule_def.rule, ConfigMatch.make(rule_def.name, envs[0]), assured, alts)


def a8_pendant_groups(g: Multigraph) -> Iterator[Group]:
    for m in detect_atoms(g, ["A8"]):
        if _outside(g, m["c"], m["e"], m.vertices):
            continue
        grp = delete_with_pendants(g, m.vertices, "DBL3", m, True)
        if grp is not None:
            yield grp


_ATOM_DOUBLE_CORE = Pattern(
    "double-pair-at-vertex",
    {("f", "c"): 1, ("f", "e"): 1, ("f", "g"): 1, ("c", "g"): 2, ("g", "e"): 2},
    frozenset({"g"}),
    induced=False,
)


def atomdoub_pendant_groups(g: Multigraph) -> Iterator[Group]:
    seen: set[frozenset[int]] = set()
    for env in match_pattern(g, _ATOM_DOUBLE_CORE):
        verts = frozenset(env.values())
        if verts in seen:
            continue
        seen.add(verts)
        grp = delete_with_pendants(g, verts, "DBL2", ConfigMatch.make("double-pair-at-vertex", env), True)
        if grp is not None:
            yield grp


def w6_groups(g: Multigraph) -> Iterator[Group]:
    for m in find_wheels(g, 5):
        verts = m.vertices
        if any(g.mult(x, y) > 1 for x, y in combinations(verts, 2)):
            continue
        grp = delete_with_pendants(g, verts, "SIMPLE-SH", ConfigMatch.make("A9", m.map), True)
        if grp is not None:
            yield grp


# --- driver --------------------------------------------------------------------------


def _families(g: Multigraph) -> Iterator[Callable[[], Iterator[Group]]]:
    yield lambda: cut_groups(g)
    yield lambda: clique_groups(g)
    yield lambda: deg52_groups(g, ["A6"])
    yield lambda: diamond_groups(g)
    yield lambda: table_groups(g, ["TE3", "TRIPLE"])
    yield lambda: deg52_groups(g, ["A7", "A4"])
    yield lambda: table_groups(g, ["DBL3"])
    yield lambda: a8_pendant_groups(g)
    yield lambda: table_groups(g, ["DBL2"])
    yield lambda: atomdoub_pendant_groups(g)
    yield lambda: table_groups(g, ["DBL1", "PENDANT"])
    yield lambda: table_groups(g, ["SIMPLE-SH"])
    yield lambda: w6_groups(g)
    yield lambda: a2_via_a3_groups(g)
    yield lambda: te4_groups(g)


def candidate_groups(g: Multigraph) -> Iterator[Group]:
    for fam in _families(g):
        yield from fam()


FindingHook = Callable[[InconsistencyError], None]


def _raise(err: InconsistencyError) -> None:
    raise err


def reduce_once(
    g: Multigraph,
    enable_found_shrink: bool = False,
    on_finding: FindingHook | None = None,
) -> tuple[Multigraph, ReductionStep] | None:
    """Apply the first rewrite that validates, or return None for a terminal graph.

    Raises :class:`StuckError` if ``g`` is not terminal and nothing applies.
    An assured group that produces nothing valid is passed to ``on_finding``
    (default: raise :class:`InconsistencyError`).
    """
    on_finding = on_finding or _raise
    base = classify_base(g)
    if base.terminal:
        if enable_found_shrink and base.tag == "Foundational":
            for grp in found_shrink_groups(g):
                hit = _try_group(g, grp, on_finding)
                if hit:
                    return hit
        return None
    for grp in candidate_groups(g):
        hit = _try_group(g, grp, on_finding)
        if hit:
            return hit
    raise StuckError(g)


def _try_group(g: Multigraph, grp: Group, on_finding: FindingHook) -> tuple[Multigraph, ReductionStep] | None:
    reasons = []
    for variant, build in grp.alts:
        try:
            h = build()
        except (_Reject, LoopError, GuardViolation, ValueError) as exc:
            reasons.append(f"{variant}: {exc}")
            continue
        why = validate_step(g, h)
        if why is None:
            step = ReductionStep(grp.rule, grp.match, certificate(g), certificate(h), h.order - g.order, variant)
            return h, step
        reasons.append(f"{variant}: {why}")
    if grp.assured:
        on_finding(InconsistencyError(grp.rule, g, grp.match, "; ".join(reasons) or "no alternative"))
    return None


def reduce_to_base(
    g: Multigraph,
    enable_found_shrink: bool = False,
    on_finding: FindingHook | None = None,
) -> ReductionTrace:
    """Reduce until every component is terminal; the trace is depth-first over splits."""
    trace = ReductionTrace()
    hook = on_finding
    if hook is None:
        def hook(err: InconsistencyError) -> None:
            trace.findings.append(err)
            raise err

    stack = list(reversed(split_components(g)))
    while stack:
        cur = stack.pop()
        hit = reduce_once(cur, enable_found_shrink, hook)
        if hit is None:
            trace.terminals.append(classify_base(cur))
            continue
        nxt, step = hit
        if validate_step(cur, nxt) is not None:  # pragma: no cover - checked in reduce_once
            raise RuntimeError(f"measure failed to decrease at {step}")
        trace.steps.append(step)
        stack.extend(reversed(split_components(nxt)))
    return trace


def found_shrink_groups(g: Multigraph) -> Iterator[Group]:
    """Shrink a foundational graph at a triangle with only single edges.

    One corner ``v`` goes, the opposite edge is doubled, ``v``'s two outside
    neighbours are contracted and the two survivors swap one copy of their
    double edges so the new double edge sits in triangles again.
    """
    root_parts = krausz_triangles(Multigraph(g.order, ((u, v, 1) for u, v, _ in g.edges())))
    for tri in root_parts or ():
        if any(g.mult(a, b) != 1 for a, b in combinations(tri, 2)):
            continue
        alts: list[tuple[str, Build]] = []
        for v in tri:
            x, y = (w for w in tri if w != v)
            outside = [w for w in g.adj(v) if w not in tri]
            partner = {w: next(t for t, k in g.adj(w).items() if k == 2) for w in (x, y)}
            if len(outside) != 2 or len({*outside, *partner.values()}) != 4:
                continue  # needs vertex-disjoint pendant triangles
            a, b = outside

            def shrink(ed: GraphEditor, v=v, x=x, y=y, a=a, b=b, x1=partner[x], y1=partner[y]) -> None:
                ed.delete_vertex(v)
                ed.add_edge(x, y)
                ed.remove_edge(a, b)
                ed.merge(a, b)
                ed.remove_edge(x, x1)
                ed.remove_edge(y, y1)
                ed.add_edge(x, y1)
                ed.add_edge(y, x1)

            alts.append((f"corner-{v}", _edit(g, shrink)))
        if alts:
            yield Group("FOUND-SHRINK", ConfigMatch.make("triangle", dict(zip("uvw", tri))), False, alts)
