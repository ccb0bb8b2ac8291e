"""Catalogue of local rewrites given as small pattern/operation tables.

Each entry names a rule family, a left-hand side written as edges between
roles (``x-y`` for a single edge, ``x-y:k`` for multiplicity ``k``,
``x-y:k+`` for at least ``k``), the roles whose whole neighbourhood lies
inside the pattern, and one or more alternative right-hand sides.
A right-hand side is a ``;``-separated list of
operations on the matched roles:

``del r ...``        delete vertices
``add x-y [k]``      add ``k`` parallel edges (default 1)
``sub x-y [k]``      remove ``k`` parallel edges
``merge x y``        identify ``y`` into ``x``
``contract r ...``   drop every edge inside the set, then identify it to one vertex
``new r``            create a fresh vertex bound to role ``r``
``cap r``            hang a quadruple-edge pendant (two new vertices) on ``r``

``need`` lists extra conditions that make a match *assured*; besides the
pattern being induced, ``common x y`` asks for a shared neighbour outside
the pattern.  ``assured=False`` marks rewrites that are only worth a try.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRule:
    rule: str
    name: str
    lhs: str
    full: str
    alts: tuple[str, ...]
    need: tuple[str, ...] = ()
    assured: bool = True


_ONE_DOUBLE = "f-c g-f f-e c-b c-g g-b e-g:2"
_ONE_DOUBLE_H = "f-c h-f f-e c-b c-h h-b e-h:2"
_ATOM_DOUBLE = "f-c f-e f-g c-g:2 g-e:2"
_TE3_CORE = "u1-u2 u1-v2 u1-v3 u2-v1 u2-v2 u2-v3"


def _te3_spread() -> tuple[str, ...]:
    out = []
    sets = ("v3", "w1", "w2")
    for capped in sets:
        a, b = (s for s in sets if s != capped)
        for first, second in ((a, b), (b, a)):
            out.append(
                f"del u1 u2 v1 v2; cap {capped}; add {first}-x1; add {first}-y1; "
                f"add {second}-x2; add {second}-y2"
            )
    out.append("del u1 v1; add x1-y1; add w1-u2; add w1-v3")
    out.append("del u2 v2; add x2-y2; add w2-u1; add w2-v3")
    return tuple(out)


TABLE_RULES: tuple[TableRule, ...] = (
    # an edge in three triangles
    TableRule(
        "TE3", "doubled-spoke",
        f"{_TE3_CORE} u1-v1:2 u2-w2 v1-w2:2 w2-x1 w2-x2 x1-x2", "u1 u2 v1 w2",
        ("del u1 u2 v1 w2; add x1-v3; add x2-v3; cap v2",),
    ),
    TableRule(
        "TE3", "split-spokes",
        f"{_TE3_CORE} u1-v1 u1-w1 u2-w2 v1-w1 v2-w2 v1-x1 v1-y1 v2-x2 v2-y2", "u1 u2 v1 v2",
        _te3_spread(),
    ),
    # triple edges
    TableRule(
        "TRIPLE", "triple-double",
        "a-d a-c c-d c-e d-e d-f:1+ e-f:1+ a-b:3 c-b:2", "a b c",
        (
            "del a b; add c-f; add c-e; add c-d; sub e-f",
            "del a b; add c-d 2; add c-f; sub d-f",
            "contract a b c d e",
        ),
    ),
    TableRule(
        "TRIPLE", "triple-fan-double",
        "a-d a-e b-d b-c c-d:2 d-e a-b:3", "a b d",
        ("contract a b c d e",),
    ),
    TableRule(
        "TRIPLE", "triple-fan-apex",
        "a-d a-e b-d b-c c-d d-e a-b:3 d-x c-x", "a b d",
        ("sub c-x; sub d-x; contract a b c d e; cap x",),
        assured=False,
    ),
    # three double edges in a diamond
    TableRule(
        "DBL3", "a8-common",
        "f-c g-e c-g:2 e-f:2 f-g:2", "f g",
        ("del f g; add c-e 3",),
        need=("common c e",),
    ),
    TableRule(
        "DBL3", "fan-tip",
        "g-c:2 g-e:2 f-e:2 f-g f-c f-x e-x", "g f e",
        ("contract c e f g x",),
    ),
    TableRule(
        "DBL3", "fan-base",
        "g-c:2 g-e:2 f-e:2 f-g f-c f-x c-x", "g f",
        ("contract c e f g x",),
        assured=False,
    ),
    # two double edges in a diamond
    TableRule(
        "DBL2", "incident-open",
        "c-g:2 f-g:2 f-c g-e f-e d-e d-f", "f g",
        ("del f g; add c-e 2; add c-d",),
    ),
    TableRule(
        "DBL2", "incident-closed",
        "c-g:2 f-g:2 f-c g-e f-e d-c d-f b-c b-d", "c f g",
        ("del c f g; sub b-d; merge d e; cap b",),
    ),
    TableRule(
        "DBL2", "parallel-adjacent",
        "f-c g-e f-g c-g:2 f-e:2 b-e b-g a-e a-f", "e f g",
        ("del e f g; merge c a; cap b", "del e f g; merge c b; cap a"),
    ),
    TableRule(
        "DBL2", "doubled-rim-wheel",
        "h-r0 h-r1 h-r2 h-r3 h-r4 r0-r1:2 r1-r2:2 r2-r3:2 r3-r4:2 r4-r0:2", "h r0 r1 r2 r3 r4",
        ("del h r0; add r1-r4 2; add r1-r3; add r4-r2",),
        assured=False,
    ),
    TableRule(
        "DBL2", "incident-pendants",
        f"{_ATOM_DOUBLE} c-c1 c-c2 c1-c2 e-e1 e-e2 e1-e2 f-f1 f-f2 f1-f2", "g c e f",
        (
            "del c e f g; sub e1-e2; add e2-c1; add e2-c2; add e1-f1; add e1-f2",
            "del c e f g; add c1-c2; add e1-e2; add f1-f2",
        ),
        assured=False,
    ),
    TableRule(
        "DBL2", "incident-shared-two",
        f"{_ATOM_DOUBLE} c-h c-i h-i e-i e-j i-j", "g c e",
        ("del g e; add c-i; add c-j; add f-i; add f-j; sub i-j",),
    ),
    TableRule(
        "DBL2", "incident-shared-pair",
        f"{_ATOM_DOUBLE} c-h c-i h-i e-i e-h", "g c e",
        ("del g e; add c-f; add c-h; add f-i",),
    ),
    TableRule(
        "DBL2", "incident-fan",
        f"{_ATOM_DOUBLE} f-f1 e-e1 e1-f1 e-f1", "g e",
        ("del g e; add c-f; add c-f1; add f-e1",),
    ),
    # one double edge in a diamond
    TableRule(
        "DBL1", "second-triangle",
        f"{_ONE_DOUBLE} f-e1 e1-e2 e-e1 e-e2", "g e",
        ("del g e; add f-b; add c-e1; add f-e2",),
    ),
    TableRule(
        "DBL1", "pendant-unsafe",
        f"{_ONE_DOUBLE} e-e1 e-e2 e1-e2 j-e1 j-e2", "g e",
        ("del g e; add c-f; add b-f; add e1-e2",),
    ),
    TableRule(
        "DBL1", "aloof-fan",
        f"{_ONE_DOUBLE} e-e1 e-e2 e1-e2 a-c a-f", "g e",
        ("del g e; add c-f 2; sub b-c; add b-e1; add b-e2",),
    ),
    TableRule(
        "DBL1", "aloof-fan-closed",
        "f-c g-f f-e c-b:2 c-g g-b e-g:2 e-e1 e-e2 e1-e2 a-c a-f f-z a-z", "g e f c",
        ("del g f; add e-a; add e-b; add e-c; add c-z",),
    ),
    TableRule(
        "DBL1", "aloof-fan-shared",
        f"{_ONE_DOUBLE} e-e1 e-e2 e1-e2 a-c a-f f-z a-z c-y b-y", "g e f c",
        ("del g f; add e-a; add e-b; add e-c; add c-z",),
    ),
    TableRule(
        "DBL1", "pendants-unsafe",
        f"{_ONE_DOUBLE_H} e-e1 e-e2 e1-e2 f-f1 f-f2 g-f1 g-f2 f1-f2", "h f e",
        ("del h f e; new j; add j-b; add j-e1; add j-e2; add j-c 2; add f1-f2",),
    ),
    TableRule(
        "DBL1", "pendants-doubled-tail",
        f"{_ONE_DOUBLE_H} e-e1 e-e2 e1-e2 f-f1 f-f2 f1-f2 a-b a-c:2", "c h f e",
        ("del c h f e; add a-b; add f1-a; add f1-b; sub f1-f2; add f2-e1; add f2-e2",),
    ),
    TableRule(
        "DBL1", "pendants-aloof",
        f"{_ONE_DOUBLE_H} e-e1 e-e2 e1-e2 f-f1 f-f2 f1-f2 c-p c-q p-q", "h e f c",
        (
            "del h e f c; sub e1-e2; sub f1-f2; new u1; new u2; add u1-u2; "
            "add u1-e1; add u1-e2; add u1-f1; add u1-f2; "
            "add u2-e1; add u2-e2; add u2-f1; add u2-f2; add b-p; add b-q",
        ),
    ),
    # lone triangle with a double edge
    TableRule(
        "PENDANT", "double-triangle",
        "c-e:2 c-f e-f c-c1 c-c2 c1-c2 e-e1 e-e2 e1-e2", "c e",
        (
            "del c e; add f-c1; add f-c2; add e1-e2",
            "del c e; add f-e1; add f-e2; add c1-c2",
        ),
        assured=False,
    ),
    # simple diamonds with crowded surroundings
    TableRule(
        "SIMPLE-SH", "strip",
        "a-b a-c b-c b-d c-d c-e d-e d-f e-f a-g c-g h-d h-f", "c d",
        ("del c d; add a-b; add e-f; add b-g; add e-h",),
    ),
    TableRule(
        "SIMPLE-SH", "fan",
        "a-b a-d b-c b-d c-d c-e d-e d-f e-f c-g c-h g-h", "c d",
        (
            "del c d; add b-e; add b-f; add a-e; add g-h",
            "del c d; add a-e; add b-e 2; sub e-f; add f-g; add f-h",
            "del c d; add b-f; add b-e 2; sub a-b; add a-g; add a-h",
        ),
    ),
    TableRule(
        "SIMPLE-SH", "fan-closed",
        "a-b a-d b-c b-d c-d c-e d-e d-f e-f c-g c-h g-h y-z y-b z-a z-b e-j e-i i-j f-j",
        "b c d e",
        ("del b c d e; sub g-h; add a-g; add a-y; add z-g; add f-i; add f-h; add j-h",),
    ),
    TableRule(
        "SIMPLE-SH", "three-sided",
        "a-b b-c a-d b-d b-e c-e c-f f-e d-e d-g d-h e-h g-h g-i h-i h-j i-j", "d e h",
        ("del d h; add a-e; add b-e; add g-i; add g-j",),
    ),
    TableRule(
        "SIMPLE-SH", "four-sided",
        "a-b b-c a-d b-d b-e c-e d-e h-e h-g g-e g-f d-f d-g b-i c-i g-j h-j", "b d e g",
        ("del b g; add c-d; add h-d; add e-i; add e-j; add a-f",),
    ),
)
