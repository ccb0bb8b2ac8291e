"""Detection of the named configurations and terminal classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterator, Mapping, Sequence

from .canon import certificate
from .mgraph import Multigraph, has_triangle_property, is_quintic


@dataclass(frozen=True)
class ConfigMatch:
    """An embedding of a named pattern: role name -> host vertex."""

    kind: str
    roles: tuple[tuple[str, int], ...]
    info: tuple[tuple[str, Any], ...] = ()

    @classmethod
    def make(cls, kind: str, roles: Mapping[str, int], **info: Any) -> "ConfigMatch":
        vals = list(roles.values())
        if len(set(vals)) != len(vals):
            raise ValueError(f"{kind}: role map is not injective: {dict(roles)}")
        return cls(kind, tuple(roles.items()), tuple(sorted(info.items())))

    def __getitem__(self, role: str) -> int:
        for r, v in self.roles:
            if r == role:
                return v
        raise KeyError(role)

    @property
    def map(self) -> dict[str, int]:
        return dict(self.roles)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for _, v in self.roles)

    def get(self, key: str, default: Any = None) -> Any:
        return dict(self.info).get(key, default)

    def as_json(self) -> dict:
        return {"kind": self.kind, "roles": dict(self.roles), "vertices": sorted(self.vertices)}


@dataclass(frozen=True, eq=False)
class Pattern:
    """Small multigraph pattern matched into a host.

    ``edges`` fixes exact multiplicities; pairs listed in ``at_least`` need at
    least that multiplicity; pairs in ``free`` are unconstrained.  With
    ``induced`` every other pair of roles must be non-adjacent.  Roles in
    ``full`` have their whole neighbourhood inside the match.
    """

    name: str
    edges: Mapping[tuple[str, str], int]
    full: frozenset[str] = frozenset()
    at_least: Mapping[tuple[str, str], int] = field(default_factory=dict)
    free: frozenset[frozenset[str]] = frozenset()
    induced: bool = True
    extra_roles: tuple[str, ...] = ()

    def role_list(self) -> list[str]:
        seen: list[str] = []
        for pair in list(self.edges) + list(self.at_least):
            for r in pair:
                if r not in seen:
                    seen.append(r)
        for r in self.extra_roles:
            if r not in seen:
                seen.append(r)
        return seen

    def requirement(self, r: str, s: str) -> tuple[int, int | None] | None:
        """Return (min, max) multiplicity for a role pair, or None if free."""
        for key in ((r, s), (s, r)):
            if key in self.edges:
                k = self.edges[key]
                return k, k
            if key in self.at_least:
                return self.at_least[key], None
        if frozenset((r, s)) in self.free:
            return None
        return (0, 0) if self.induced else None


@lru_cache(maxsize=None)
def _plan(p: Pattern) -> tuple[list[str], dict[str, list[tuple[str, int, int | None]]], dict[str, int]]:
    roles = p.role_list()
    adjacency: dict[str, set[str]] = {r: set() for r in roles}
    for (a, b), k in list(p.edges.items()) + list(p.at_least.items()):
        if k > 0:
            adjacency[a].add(b)
            adjacency[b].add(a)
    order: list[str] = []
    remaining = list(roles)
    while remaining:
        connected = [r for r in remaining if adjacency[r] & set(order)]
        pool = connected or remaining
        nxt = max(pool, key=lambda r: (len(adjacency[r] & set(order)), len(adjacency[r])))
        order.append(nxt)
        remaining.remove(nxt)
    checks: dict[str, list[tuple[str, int, int | None]]] = {}
    for i, r in enumerate(order):
        lst = []
        for s in order[:i]:
            req = p.requirement(r, s)
            if req is not None:
                lst.append((s, req[0], req[1]))
        checks[r] = lst
    pdeg = {r: 0 for r in roles}
    for (a, b), k in p.edges.items():
        pdeg[a] += k
        pdeg[b] += k
    return order, checks, pdeg


def match_pattern(g: Multigraph, p: Pattern, fixed: Mapping[str, int] | None = None) -> Iterator[dict[str, int]]:
    """Yield every role assignment of ``p`` into ``g`` (all automorphic copies)."""
    order, checks, pdeg = _plan(p)
    fixed = dict(fixed or {})
    assign: dict[str, int] = {}
    used: set[int] = set()

    def ok_full(r: str, v: int) -> bool:
        if r not in p.full:
            return True
        return g.degree(v) == pdeg[r]

    def rec(i: int) -> Iterator[dict[str, int]]:
        if i == len(order):
            for r in p.full:
                v = assign[r]
                if any(w not in used for w in g.adj(v)):
                    return
            yield dict(assign)
            return
        r = order[i]
        if r in fixed:
            cands: Sequence[int] = [fixed[r]]
        else:
            anchor = next((s for s, lo, _ in checks[r] if lo > 0), None)
            cands = list(g.adj(assign[anchor])) if anchor is not None else list(g.vertices())
        for v in cands:
            if v in used or not ok_full(r, v):
                continue
            good = True
            for s, lo, hi in checks[r]:
                k = g.mult(v, assign[s])
                if k < lo or (hi is not None and k > hi):
                    good = False
                    break
            if not good:
                continue
            assign[r] = v
            used.add(v)
            yield from rec(i + 1)
            used.discard(v)
            del assign[r]

    yield from rec(0)


def _dedup(matches: Iterator[dict[str, int]]) -> list[dict[str, int]]:
    seen: set[frozenset[int]] = set()
    out = []
    for m in matches:
        key = frozenset(m.values())
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


# --- diamonds, cliques, wheels ---------------------------------------------------


def find_diamonds(g: Multigraph, induced: bool = True) -> list[ConfigMatch]:
    """Diamonds with tips ``a``, ``d`` and central edge ``b c``.

    With ``induced=False`` diamonds whose tips are adjacent (inside a K4) are
    included and flagged ``in_k4``.
    """
    out = []
    for b, c, _ in g.edges():
        common = sorted(w for w in g.adj(b) if w in g.adj(c))
        for a, d in combinations(common, 2):
            in_k4 = g.mult(a, d) > 0
            if induced and in_k4:
                continue
            roles = {"a": a, "b": b, "c": c, "d": d}
            multi = tuple(
                (x, y)
                for x, y in (("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"))
                if g.mult(roles[x], roles[y]) > 1
            )
            out.append(ConfigMatch.make("diamond", roles, central=("b", "c"), multi=multi, in_k4=in_k4))
    return out


def find_cliques(g: Multigraph, k: int) -> list[ConfigMatch]:
    if k < 1:
        raise ValueError("clique size must be positive")
    out = []

    def rec(chosen: list[int], cands: list[int]) -> None:
        if len(chosen) == k:
            out.append(ConfigMatch.make(f"K{k}", {f"v{i}": v for i, v in enumerate(chosen)}))
            return
        for i, v in enumerate(cands):
            if len(chosen) + len(cands) - i < k:
                return
            rec(chosen + [v], [w for w in cands[i + 1:] if w in g.adj(v)])

    rec([], list(g.vertices()))
    return out


def clique_number(g: Multigraph) -> int:
    k = 1 if g.order else 0
    while find_cliques(g, k + 1):
        k += 1
        if k >= g.order:
            break
    return k


def find_wheels(g: Multigraph, rim: int) -> list[ConfigMatch]:
    """Hub plus a rim cycle of length ``rim`` inside the hub's neighbourhood."""
    if rim not in (4, 5):
        raise ValueError("rim must be 4 or 5")
    kind = "W5" if rim == 4 else "W6"
    out = []
    for h in g.vertices():
        nbrs = sorted(g.adj(h))
        seen: set[frozenset[int]] = set()
        for start in nbrs:
            path = [start]

            def rec() -> None:
                if len(path) == rim:
                    if g.mult(path[-1], path[0]) and path[1] < path[-1]:
                        key = frozenset(path)
                        if key not in seen:
                            seen.add(key)
                            roles = {"hub": h}
                            roles.update({f"r{i}": v for i, v in enumerate(path)})
                            out.append(ConfigMatch.make(kind, roles))
                    return
                for w in g.adj(path[-1]):
                    if w in g.adj(h) and w > start and w not in path:
                        path.append(w)
                        rec()
                        path.pop()

            rec()
    return out


# --- atoms -----------------------------------------------------------------------


def _p(name: str, edges: dict[str, int], full: str = "", **kw: Any) -> Pattern:
    parsed = {}
    for key, k in edges.items():
        a, b = key.split("-")
        parsed[(a, b)] = k
    return Pattern(name, parsed, frozenset(full.split()) if full else frozenset(), **kw)


ATOM_PATTERNS: dict[str, Pattern] = {
    "A1": _p("A1", {"x-y": 1, "y-z": 1, "x-z": 1}),
    "A2": _p("A2", {"a-b": 1, "a-c": 1, "a-d": 1, "b-c": 1, "b-d": 1, "c-d": 1}),
    "A3": _p("A3", {"x-y": 2, "y-z": 1, "x-z": 1}),
    "A4": _p("A4", {"y-z": 4, "a-y": 1, "a-z": 1}),
    "A5": _p("A5", {"b-d": 3, "a-b": 1, "a-c": 1, "a-d": 1, "b-c": 1, "c-d": 1}),
    "A6": _p("A6", {"u1-u2": 1, "u1-v1": 1, "u1-v2": 1, "u1-v3": 1, "u1-v4": 1,
                    "u2-v1": 1, "u2-v2": 1, "u2-v3": 1, "u2-v4": 1}),
    "A7": _p("A7", {"c-d": 3, "u1-c": 1, "u1-d": 1, "u2-c": 1, "u2-d": 1}),
    "A8": _p("A8", {"f-c": 1, "g-e": 1, "c-g": 2, "e-f": 2, "f-g": 2}),
    "A9": _p("A9", {"h-r0": 1, "h-r1": 1, "h-r2": 1, "h-r3": 1, "h-r4": 1,
                    "r0-r1": 1, "r1-r2": 1, "r2-r3": 1, "r3-r4": 1, "r4-r0": 1}),
    "A10": _p("A10", {"a-b": 1, "a-c": 1, "a-d": 1, "b-c": 2, "c-d": 2, "b-d": 2}),
    "A11": _p("A11", {"a-d": 1, "b-d": 1, "a-b": 2, "c-b": 2, "c-d": 3}),
}

# Table of in-match degree profiles: (#degree 5, #degree 3, #degree 2).
ATOM_PROFILES: dict[str, tuple[int, int, int]] = {
    "A1": (0, 0, 3),
    "A2": (0, 4, 0),
    "A3": (0, 2, 1),
    "A4": (2, 0, 1),
    "A5": (2, 2, 0),
    "A6": (2, 0, 4),
    "A7": (2, 0, 2),
    "A8": (2, 2, 0),
    "A9": (1, 5, 0),
    "A10": (3, 1, 0),
    "A11": (3, 1, 0),
}


def in_match_degrees(g: Multigraph, verts: frozenset[int] | set[int]) -> dict[int, int]:
    return {v: sum(k for w, k in g.adj(v).items() if w in verts) for v in verts}


def degree_profile(g: Multigraph, verts: frozenset[int] | set[int]) -> tuple[int, int, int]:
    d = in_match_degrees(g, verts).values()
    return (sum(1 for x in d if x == 5), sum(1 for x in d if x == 3), sum(1 for x in d if x == 2))


def detect_atoms(g: Multigraph, kinds: Sequence[str] | None = None) -> list[ConfigMatch]:
    out = []
    for name in kinds or ATOM_PATTERNS:
        for m in _dedup(match_pattern(g, ATOM_PATTERNS[name])):
            verts = frozenset(m.values())
            profile = degree_profile(g, verts)
            if profile != ATOM_PROFILES[name]:  # pragma: no cover - pattern guarantees it
                raise AssertionError(f"{name} match {m} has profile {profile}")
            full = tuple(sorted(v for v, d in in_match_degrees(g, verts).items() if d == g.degree(v)))
            out.append(ConfigMatch.make(name, m, profile=profile, full=full))
    return out


def count_a6(g: Multigraph) -> int:
    """Number of A6 matches (edges with four pairwise non-adjacent common neighbours)."""
    total = 0
    for u, v, k in g.edges():
        if k != 1:
            continue
        common = [w for w in g.adj(u) if w in g.adj(v)]
        if len(common) != 4:
            continue
        if all(g.mult(u, w) == 1 and g.mult(v, w) == 1 for w in common) and not any(
            g.mult(x, y) for x, y in combinations(common, 2)
        ):
            total += 1
    return total


def s_of_config(g: Multigraph, m: ConfigMatch) -> int:
    """Outside vertices adjacent to two vertices (K4) or two adjacent vertices (diamond)."""
    verts = m.vertices
    if m.kind in ("K4", "A2", "A5"):
        count = 0
        for w in g.vertices():
            if w not in verts and sum(1 for x in verts if g.mult(w, x)) >= 2:
                count += 1
        return count
    if m.kind == "diamond":
        pairs = [(m[x], m[y]) for x, y in (("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"))]
        count = 0
        for w in g.vertices():
            if w in verts:
                continue
            if any(g.mult(w, x) and g.mult(w, y) for x, y in pairs):
                count += 1
        return count
    raise ValueError(f"s_H is not defined for {m.kind}")


# --- terminal classification -----------------------------------------------------


@dataclass(frozen=True)
class BaseClass:
    tag: str
    root: Multigraph | None = None

    @property
    def terminal(self) -> bool:
        return self.tag != "NotTerminal"


@lru_cache(maxsize=1)
def _base_certs() -> dict[str, str]:
    from .construct import BASE_QMG, base_graphs

    return {certificate(g): name for name, g in zip(BASE_QMG, base_graphs())}


def krausz_triangles(h: Multigraph) -> list[tuple[int, int, int]] | None:
    """Partition the edges of a simple 4-regular graph into triangles."""
    remaining = {(u, v) for u, v, _ in h.edges()}
    chosen: list[tuple[int, int, int]] = []

    def key(x: int, y: int) -> tuple[int, int]:
        return (x, y) if x < y else (y, x)

    def rec() -> bool:
        if not remaining:
            return True
        u, v = min(remaining)
        for w in sorted(h.adj(u)):
            if w in h.adj(v) and key(u, w) in remaining and key(v, w) in remaining:
                tri = (key(u, v), key(u, w), key(v, w))
                for e in tri:
                    remaining.discard(e)
                chosen.append(tuple(sorted((u, v, w))))
                if rec():
                    return True
                chosen.pop()
                remaining.update(tri)
        return False

    return list(chosen) if rec() else None


def foundational_root(g: Multigraph) -> Multigraph | None:
    """Cubic root if ``g`` is a line graph of a cubic graph with a doubled perfect matching."""
    for v in g.vertices():
        mults = sorted(g.adj(v).values())
        if mults.count(2) != 1 or any(k > 2 for k in mults):
            return None
    stripped = Multigraph(g.order, ((u, v, 1) for u, v, _ in g.edges()))
    if any(stripped.degree(v) != 4 for v in stripped.vertices()):
        return None
    parts = krausz_triangles(stripped)
    if parts is None:
        return None
    where: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for i, tri in enumerate(parts):
        for v in tri:
            where[v].append(i)
    if any(len(t) != 2 for t in where.values()):  # pragma: no cover - degree 4 forces two
        return None
    root = Multigraph(len(parts), ((a, b, 1) for a, b in where.values()))
    if any(k != 1 for _, _, k in root.edges()):
        return None
    return root


def classify_base(g: Multigraph) -> BaseClass:
    if not is_quintic(g):
        raise ValueError("classify_base needs a quintic graph")
    if not has_triangle_property(g):
        raise ValueError("classify_base needs the triangle property")
    if g.order <= 6:
        tag = _base_certs().get(certificate(g))
        if tag is not None:
            return BaseClass(tag)
    root = foundational_root(g)
    if root is not None:
        return BaseClass("Foundational", root)
    return BaseClass("NotTerminal")
