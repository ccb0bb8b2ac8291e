from __future__ import annotations

from quintri.patterns import find_cliques, find_diamonds
from quintri.reduce import DIAMOND_EDGES, PAIRINGS, x_reduce, z_reduce


def guard_cases(g):
    """(reducer, match, pairing) for every Z and X rewrite the host offers."""
    for d in find_diamonds(g):
        if d.get("in_k4", False):
            continue
        for pairing in ("abcd", "acbd"):
            pairs = {frozenset(e) for e in PAIRINGS[pairing]}
            multi = any(g.mult(d[x], d[y]) > 1 for x, y in DIAMOND_EDGES if frozenset((x, y)) not in pairs)
            yield (x_reduce if multi else z_reduce), d, pairing
    for k in find_cliques(g, 4):
        for pairing in PAIRINGS:
            yield x_reduce, k, pairing
