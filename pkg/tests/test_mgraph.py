from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from quintri.construct import complete_graph
from quintri.mgraph import (
    GraphEditor,
    LoopError,
    Multigraph,
    Triangle,
    corollary1_tally,
    cut_vertices,
    degree,
    has_triangle_property,
    is_quintic,
    m_of_triangle,
    observation1_holds,
    t_of_edge,
    triangle_free_edges,
    triangle_property_by_neighbourhoods,
    triangles,
)

from conftest import multigraphs


def brute_tp(g: Multigraph) -> bool:
    m = g.matrix()
    n = g.order
    return all(
        any(m[u][w] and m[v][w] for w in range(n))
        for u in range(n)
        for v in range(u + 1, n)
        if m[u][v]
    )


def test_degree_examples(k6, bases):
    assert all(degree(k6, v) == 5 for v in k6.vertices())
    assert all(degree(bases["4a"], v) == 5 for v in range(4))
    assert degree(Multigraph(3), 0) == 0
    with pytest.raises(IndexError):
        degree(Multigraph(3), 3)


def test_loops_are_rejected():
    with pytest.raises(LoopError):
        Multigraph(2, [(1, 1, 1)])
    ed = GraphEditor(Multigraph(2, [(0, 1, 2)]))
    ed.merge(0, 1)
    with pytest.raises(LoopError):
        ed.freeze()


def test_triangle_property_examples(k6, bases):
    assert has_triangle_property(k6)
    assert all(has_triangle_property(g) for g in bases.values())
    k55 = Multigraph(10, [(i, j, 1) for i in range(5) for j in range(5, 10)])
    assert not has_triangle_property(k55)
    assert len(triangle_free_edges(k55)) == 25
    # a lone double edge has no third vertex to close a triangle
    assert not has_triangle_property(Multigraph(2, [(0, 1, 5)]))


def test_edge_triangle_counts(k6, bases):
    assert {t_of_edge(k6, u, v) for u, v, _ in k6.edges()} == {4}
    # multiplicity does not add triangles: they are vertex sets
    g = bases["4b"]
    assert {t_of_edge(g, u, v) for u, v, _ in g.edges()} == {2}


def test_triangle_classes():
    # a triangle with three pendant-free edges is aloof
    tri = Multigraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert m_of_triangle(tri, Triangle((0, 1, 2))).label == "aloof"
    diamond = Multigraph(4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])
    cls = m_of_triangle(diamond, Triangle((0, 1, 2)))
    assert (cls.m_value, cls.label) == (2, "unsafe")
    assert m_of_triangle(complete_graph(4), Triangle((0, 1, 2))).label == "m0"
    with pytest.raises(ValueError):
        Triangle((1, 1, 2))


def test_cut_vertices(bases):
    assert cut_vertices(bases["6a"]) == {0}
    assert cut_vertices(bases["4a"]) == set()


def test_corollary_tally_k6(k6):
    assert corollary1_tally(k6) == (15, 3)


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_triangle_property_matches_brute_force(g):
    assert has_triangle_property(g) == brute_tp(g)
    assert triangle_property_by_neighbourhoods(g) == brute_tp(g)


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_symmetry_and_degree_sum(g):
    for u in g.vertices():
        for v in g.vertices():
            assert g.mult(u, v) == g.mult(v, u)
        assert g.mult(u, u) == 0
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count()


@settings(max_examples=100, deadline=None)
@given(multigraphs())
def test_triangles_are_closed_triples(g):
    found = {t.verts for t in triangles(g)}
    expected = {
        t for t in combinations(g.vertices(), 3)
        if all(g.mult(a, b) for a, b in combinations(t, 2))
    }
    assert found == expected


def test_census_invariants(census):
    for n, graphs in census.items():
        for g in graphs:
            assert is_quintic(g)
            assert all(g.mult(u, v) <= 5 for u, v, _ in g.edges())
            assert all(1 <= t_of_edge(g, u, v) <= 4 for u, v, _ in g.edges())
            assert observation1_holds(g)
