from __future__ import annotations

import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from quintri.canon import are_isomorphic, canonical_form, canonical_graph, certificate, graph_from_certificate
from quintri.construct import base_graphs, complete_graph, cube_graph, foundational_from_cubic
from quintri.mgraph import Multigraph

from conftest import multigraphs


def nx_multi(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices())
    for u, v, k in g.edges():
        h.add_edges_from([(u, v)] * k)
    return h


@settings(max_examples=150, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_certificate_is_relabelling_invariant(g, rnd):
    perm = list(g.vertices())
    rnd.shuffle(perm)
    assert certificate(g.relabel(perm)) == certificate(g)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_order=6), multigraphs(max_order=6))
def test_isomorphism_agrees_with_networkx(g, h):
    oracle = g.order == h.order and nx.is_isomorphic(nx_multi(g), nx_multi(h))
    assert are_isomorphic(g, h) == oracle


@settings(max_examples=100, deadline=None)
@given(multigraphs())
def test_certificate_round_trip(g):
    cert = certificate(g)
    back = graph_from_certificate(cert)
    assert are_isomorphic(back, g)
    assert certificate(back) == cert
    assert canonical_graph(g) == back


def test_permutation_maps_to_canonical_graph():
    g = foundational_from_cubic(cube_graph())
    cf = canonical_form(g)
    assert g.relabel(list(cf.perm)) == canonical_graph(g)


def test_hard_regular_instances():
    # vertex-transitive inputs exercise the automorphism pruning
    rng = random.Random(3)
    for g in (complete_graph(7), foundational_from_cubic(cube_graph()), *base_graphs()):
        perm = list(g.vertices())
        rng.shuffle(perm)
        assert certificate(g.relabel(perm)) == certificate(g)


def test_distinguishes_multiplicity():
    a = Multigraph(3, [(0, 1, 2), (1, 2, 1)])
    b = Multigraph(3, [(0, 1, 1), (1, 2, 2)])
    c = Multigraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, c)
