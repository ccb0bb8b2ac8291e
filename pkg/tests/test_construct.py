from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintri.canon import are_isomorphic, certificate
from quintri.construct import (
    FOUNDATIONAL_6_QMG,
    BiregularGraph,
    ConstructionError,
    InvalidExpansion,
    base_graphs,
    complete_bipartite_34,
    complete_graph,
    cube_graph,
    edge_ends,
    foundational_from_cubic,
    line_graph,
    perfect_matchings,
    q_of_biregular,
    random_expansion,
    ring_of_k4s,
    x_expand,
    z_expand,
)
from quintri.enumeration import biregular_from_certificate, enumerate_biregular34, enumerate_cubic
from quintri.formats import parse_qmg
from quintri.mgraph import cut_vertices, has_triangle_property, is_quintic
from quintri.patterns import ConfigMatch, classify_base, find_cliques
from quintri.reduce import x_reduce, z_reduce


def test_base_graphs():
    gs = base_graphs()
    assert [g.order for g in gs] == [4, 4, 6, 6]
    assert all(is_quintic(g) and has_triangle_property(g) for g in gs)
    assert len({certificate(g) for g in gs}) == 4
    assert cut_vertices(gs[2]) == {0} and cut_vertices(gs[3]) == {0}


def test_q_of_k34():
    g = q_of_biregular(complete_bipartite_34())
    assert g.order == 12 and is_quintic(g) and has_triangle_property(g)
    assert len(find_cliques(g, 4)) == 3


def test_q_of_family_orders():
    for cert in enumerate_biregular34(6).certs[:5]:
        g = q_of_biregular(biregular_from_certificate(cert))
        assert g.order % 12 == 0 and is_quintic(g) and has_triangle_property(g)


def test_biregular_validation():
    with pytest.raises(ConstructionError):
        BiregularGraph.from_neighbourhoods(3, [(0, 1, 2)] * 3)
    with pytest.raises(ConstructionError):
        BiregularGraph.from_neighbourhoods(3, [(0, 1, 1)] * 4)


def test_foundational_fixtures():
    left = foundational_from_cubic(complete_graph(4))
    assert are_isomorphic(left, parse_qmg(FOUNDATIONAL_6_QMG))
    mid = foundational_from_cubic(cube_graph())
    assert mid.order == 12 and is_quintic(mid) and has_triangle_property(mid)
    for g in (left, mid):
        # exactly one double edge at every vertex
        assert all(sorted(g.adj(v).values()).count(2) == 1 for v in g.vertices())


def test_foundational_every_matching_of_octahedron():
    lg, _ = line_graph(complete_graph(4))
    matchings = list(perfect_matchings(lg))
    assert len(matchings) == 8
    for m in matchings:
        g = foundational_from_cubic(complete_graph(4), m)
        assert classify_base(g).tag == "Foundational"


def test_foundational_round_trip_small_cubics():
    for n in (4, 8):
        for c in enumerate_cubic(n).graphs():
            lg, _ = line_graph(c)
            for m in list(perfect_matchings(lg))[:6]:
                base = classify_base(foundational_from_cubic(c, m))
                assert base.tag == "Foundational" and are_isomorphic(base.root, c)


def test_foundational_errors():
    k33 = enumerate_cubic(6).graphs()
    bip = next(c for c in k33 if not find_cliques(c, 3))
    with pytest.raises(ConstructionError, match="odd order"):
        foundational_from_cubic(bip)
    with pytest.raises(ConstructionError):
        foundational_from_cubic(complete_graph(5))
    with pytest.raises(ConstructionError):
        foundational_from_cubic(complete_graph(4), [(0, 1)])


def test_ring_of_k4s():
    g = ring_of_k4s(5)
    assert g.order == 10 and is_quintic(g) and has_triangle_property(g)
    assert len(find_cliques(g, 4)) == 5
    with pytest.raises(ConstructionError):
        ring_of_k4s(3)


def test_x_expand_inverts_k6_reduction(bases, k6):
    # derived by searching all splits of the 4b graph
    assert are_isomorphic(x_expand(bases["4b"], 0, 2, (1, 3), (1, 3)), k6)
    k4 = find_cliques(k6, 4)[0]
    assert are_isomorphic(x_reduce(k6, k4, "abcd"), bases["4b"])


def test_expansion_argument_errors(bases):
    g = bases["4b"]
    with pytest.raises(InvalidExpansion):
        z_expand(g, 0, 1, (2, 3), (2, 3))  # adjacent pair
    with pytest.raises(InvalidExpansion):
        x_expand(g, 0, 2, (1,), (1, 3))
    with pytest.raises(InvalidExpansion):
        x_expand(g, 0, 2, (2, 2), (1, 3))  # not enough spare edges


def test_expansions_of_4a_validate(bases):
    g = bases["4a"]
    made = 0
    for u, v in combinations(g.vertices(), 2):
        eu, ev = edge_ends(g, u), edge_ends(g, v)
        eu.remove(v)
        ev.remove(u)
        for su in set(combinations(eu, 2)):
            for sv in set(combinations(ev, 2)):
                try:
                    h = x_expand(g, u, v, su, sv)
                except InvalidExpansion:
                    continue
                made += 1
                assert h.order == 6 and is_quintic(h) and has_triangle_property(h)
    assert made > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["z", "x"]))
def test_expansion_is_inverted_by_reduction(census, seed, kind):
    rng = random.Random(seed)
    g = rng.choice(census[6] + census[8])
    exp = random_expansion(g, rng, kind=kind)
    if exp is None:
        return
    h, n = exp.graph, g.order
    if kind == "z":
        d = ConfigMatch.make("diamond", {"a": exp.u, "b": n, "c": n + 1, "d": exp.v})
        back = z_reduce(h, d, "abcd", force=True)
    else:
        quad = ConfigMatch.make("K4", {"v0": exp.u, "v1": n, "v2": exp.v, "v3": n + 1})
        back = x_reduce(h, quad, "abcd", force=True)
    assert are_isomorphic(back, g)
