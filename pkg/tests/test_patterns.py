from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintri.canon import are_isomorphic
from quintri.construct import (
    complete_bipartite_34,
    complete_graph,
    cube_graph,
    foundational_from_cubic,
    q_of_biregular,
)
from quintri.mgraph import Multigraph
from quintri.patterns import (
    ConfigMatch,
    classify_base,
    clique_number,
    count_a6,
    degree_profile,
    detect_atoms,
    find_cliques,
    find_diamonds,
    find_wheels,
    foundational_root,
    krausz_triangles,
    s_of_config,
)

from conftest import multigraphs


def brute_diamond_sets(g: Multigraph) -> set[frozenset[int]]:
    out = set()
    for quad in combinations(g.vertices(), 4):
        present = [p for p in combinations(quad, 2) if g.mult(*p)]
        if len(present) == 5:
            out.add(frozenset(quad))
    return out


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_order=7, max_mult=2))
def test_induced_diamonds_match_brute_force(g):
    assert {d.vertices for d in find_diamonds(g)} == brute_diamond_sets(g)
    for d in find_diamonds(g):
        assert g.mult(d["b"], d["c"]) and not g.mult(d["a"], d["d"])
        for tip in (d["a"], d["d"]):
            assert g.mult(tip, d["b"]) and g.mult(tip, d["c"])


def test_k4_diamonds_are_flagged():
    k4 = complete_graph(4)
    assert find_diamonds(k4) == []
    loose = find_diamonds(k4, induced=False)
    assert len(loose) == 6 and all(d.get("in_k4") for d in loose)


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_order=7, max_mult=1), st.integers(3, 5))
def test_cliques_match_brute_force(g, k):
    expected = {
        frozenset(s) for s in combinations(g.vertices(), k)
        if all(g.mult(a, b) for a, b in combinations(s, 2))
    }
    assert {m.vertices for m in find_cliques(g, k)} == expected


def test_clique_numbers(k6):
    assert clique_number(k6) == 6
    assert clique_number(foundational_from_cubic(cube_graph())) == 3
    with pytest.raises(ValueError):
        find_cliques(k6, 0)


def test_wheels_in_octahedron():
    octa = foundational_from_cubic(complete_graph(4))
    wheels = find_wheels(octa, 4)
    assert len(wheels) == 6
    assert {w["hub"] for w in wheels} == set(range(6))
    assert find_wheels(octa, 5) == []
    with pytest.raises(ValueError):
        find_wheels(octa, 3)


def test_atoms_in_q_of_k34():
    g = q_of_biregular(complete_bipartite_34())
    k4s = detect_atoms(g, ["A2"])
    assert len(k4s) == 3
    assert all(m.get("profile") == (0, 4, 0) for m in k4s)
    # each part-B vertex contributes one aloof connecting triangle
    assert len(detect_atoms(g, ["A1"])) == 3 * 4 + 4


def test_atom_profiles_on_fixtures(bases):
    assert detect_atoms(bases["6a"], ["A10"])
    assert detect_atoms(bases["6b"], ["A11"])
    a4 = detect_atoms(bases["6a"], ["A4"])
    assert a4 and all(degree_profile(bases["6a"], m.vertices) == (2, 0, 1) for m in a4)


def test_atom_detection_is_automorphism_closed(census):
    rng = random.Random(7)
    for g in census[6] + census[8][:40]:
        perm = list(g.vertices())
        rng.shuffle(perm)
        h = g.relabel(perm)
        for kind in ("A1", "A2", "A3", "A4", "A7", "A8", "A10", "A11"):
            left = {frozenset(perm[v] for v in m.vertices) for m in detect_atoms(g, [kind])}
            right = {m.vertices for m in detect_atoms(h, [kind])}
            assert left == right


def test_count_a6():
    # an edge whose four common neighbours are pairwise non-adjacent
    g = Multigraph(6, [(0, 1, 1)] + [(x, w, 1) for w in range(2, 6) for x in (0, 1)])
    assert count_a6(g) == 1
    assert count_a6(complete_graph(6)) == 0


def test_s_of_config():
    d = ConfigMatch.make("diamond", {"a": 0, "b": 1, "c": 2, "d": 3})
    g = Multigraph(6, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1), (4, 0, 1), (4, 1, 1), (5, 0, 1), (5, 3, 1)])
    # 4 sees the edge ab; 5 sees a and d, which are not adjacent
    assert s_of_config(g, d) == 1
    k4 = ConfigMatch.make("K4", {"v0": 0, "v1": 1, "v2": 2, "v3": 3})
    assert s_of_config(g, k4) == 2
    with pytest.raises(ValueError):
        s_of_config(g, ConfigMatch.make("W5", {"hub": 0}))


def test_classify_fixtures(k6, bases):
    for name, g in bases.items():
        assert classify_base(g).tag == f"SmallBase-{name}"
    assert classify_base(k6).tag == "NotTerminal"
    for root in (complete_graph(4), cube_graph()):
        base = classify_base(foundational_from_cubic(root))
        assert base.tag == "Foundational"
        assert are_isomorphic(base.root, root)
    with pytest.raises(ValueError):
        classify_base(Multigraph(3))


def test_krausz_and_root():
    octa = foundational_from_cubic(complete_graph(4))
    stripped = Multigraph(6, ((u, v, 1) for u, v, _ in octa.edges()))
    parts = krausz_triangles(stripped)
    assert parts is not None and len(parts) == 4
    assert foundational_root(complete_graph(6)) is None
