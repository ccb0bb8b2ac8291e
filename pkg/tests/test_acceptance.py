"""End-to-end acceptance checks; each prints one PASS/FAIL line."""
from __future__ import annotations

import random
import time

import pytest

from quintri.canon import are_isomorphic, certificate, graph_from_certificate
from quintri.cli import main
from quintri.construct import (
    FOUNDATIONAL_6_QMG,
    base_graphs,
    complete_graph,
    cube_graph,
    foundational_from_cubic,
    q_of_biregular,
    random_expansion,
    ring_of_k4s,
)
from quintri.enumeration import biregular_from_certificate, enumerate_biregular34, enumerate_quintic_tp
from quintri.formats import parse_qmg
from quintri.mgraph import (
    LoopError,
    corollary1_tally,
    has_triangle_property,
    is_quintic,
    is_simple,
    is_valid_quintic_tp,
)
from quintri.patterns import ConfigMatch, classify_base, find_diamonds
from quintri.reduce import (
    PAIRINGS,
    GuardViolation,
    reduce_to_base,
    x_reduce,
    z_reduce,
)

from rewrite_cases import guard_cases


@pytest.fixture
def verdict(capsys):
    def say(num: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return say


def test_01_n4_census(verdict):
    t = time.perf_counter()
    got = enumerate_quintic_tp(4, connected_only=True).graphs()
    dt = time.perf_counter() - t
    want = [g for g in base_graphs() if g.order == 4]
    matched = len(got) == 2 and all(any(are_isomorphic(g, w) for w in want) for g in got)
    verdict(1, matched and dt < 1, f"{len(got)} classes in {dt:.3f}s")


def test_02_biregular_count(verdict):
    t = time.perf_counter()
    census = enumerate_biregular34(6)
    dt = time.perf_counter() - t
    verdict(2, census.count == 18 and dt < 60, f"{census.count} classes in {dt:.2f}s")


def test_03_q_family(verdict):
    t = time.perf_counter()
    outs = [q_of_biregular(biregular_from_certificate(c)) for c in enumerate_biregular34(6).certs]
    good = all(g.order == 24 and is_valid_quintic_tp(g) for g in outs)
    distinct = len({certificate(g) for g in outs})
    dt = time.perf_counter() - t
    verdict(3, len(outs) == 18 and good and distinct == 18 and dt < 60,
            f"{len(outs)} graphs, {distinct} distinct, valid={good}, {dt:.2f}s")


def test_04_foundational(verdict):
    k4 = complete_graph(4)
    left = foundational_from_cubic(k4)
    mid = foundational_from_cubic(cube_graph())
    ok = are_isomorphic(left, parse_qmg(FOUNDATIONAL_6_QMG)) and mid.order == 12
    ok &= all(is_valid_quintic_tp(g) for g in (left, mid))
    for g, root in ((left, k4), (mid, cube_graph())):
        bc = classify_base(g)
        ok &= bc.tag == "Foundational" and bc.root is not None and are_isomorphic(bc.root, root)
    verdict(4, ok, f"orders {left.order}, {mid.order}")


def test_05_k6_reduction(verdict):
    trace = reduce_to_base(complete_graph(6))
    mids = [graph_from_certificate(s.after_cert) for s in trace.steps]
    small = [g for g in base_graphs() if g.order == 4]
    ok = bool(mids) and all(is_valid_quintic_tp(g) for g in mids)
    ok &= len(trace.terminals) == 1 and any(are_isomorphic(mids[-1], s) for s in small)
    verdict(5, ok, f"{len(trace.steps)} step(s) to {[t.tag for t in trace.terminals]}")


def test_06_ring_obstruction(verdict):
    ring = ring_of_k4s(5)
    spokes = [d for d in find_diamonds(ring) if not d.get("in_k4", False)]
    hits = 0
    for d in spokes:
        for pairing in ("abcd", "acbd"):
            try:
                z_reduce(ring, d, pairing)
            except GuardViolation as gv:
                hits += "Z3" in gv.codes
    verdict(6, bool(spokes) and hits == 2 * len(spokes),
            f"Z3 on {hits}/{2 * len(spokes)} spoke diamond pairings")


@pytest.mark.parametrize("n", [4, 6, 8])
def test_07_closure(verdict, capsys, n):
    t = time.perf_counter()
    code = main(["verify-closure", "--n", str(n), "--threads", "2"])
    lines = capsys.readouterr().out.splitlines()
    dt = time.perf_counter() - t
    verdict(7, code == 0 and dt < 1800, f"n={n}: {len(lines)} classes closed in {dt:.1f}s")


def test_08_corollary(verdict):
    checked = bad = 0
    for n in (6, 8):
        for g in enumerate_quintic_tp(n, connected_only=False).graphs():
            if not is_simple(g):
                continue
            rich, half = corollary1_tally(g)
            checked += 1
            bad += rich < half
    verdict(8, checked > 0 and bad == 0, f"{checked} simple graphs, {bad} violation(s)")


def test_09_guard_soundness(verdict):
    hosts = enumerate_quintic_tp(6).graphs() + enumerate_quintic_tp(8).graphs()
    violations = []
    for g in hosts:
        for fn, m, pairing in guard_cases(g):
            try:
                fn(g, m, pairing)
            except GuardViolation as gv:
                violations.append((g, fn, m, pairing, gv.codes))
    sample = random.Random(9).sample(violations, min(1000, len(violations)))
    false = 0
    for g, fn, m, pairing, codes in sample:
        try:
            h = fn(g, m, pairing, force=True)
        except LoopError:
            false += not any(c[1] == "1" for c in codes)
            continue
        false += not (any(c[1] in "23" for c in codes) and not has_triangle_property(h))
    verdict(9, len(sample) == 1000 and false == 0,
            f"{len(sample)} sampled of {len(violations)} violations, {false} false guard(s)")


def _inverted(exp, g) -> bool:
    h, n = exp.graph, g.order
    if exp.kind == "z":
        m = ConfigMatch.make("diamond", {"a": exp.u, "b": n, "c": n + 1, "d": exp.v})
        fn, pairings = z_reduce, ("abcd", "acbd")
    else:
        m = ConfigMatch.make("K4", {"v0": exp.u, "v1": n, "v2": exp.v, "v3": n + 1})
        fn, pairings = x_reduce, tuple(PAIRINGS)
    for pairing in pairings:
        try:
            back = fn(h, m, pairing)
        except (GuardViolation, ValueError, LoopError):
            continue
        if are_isomorphic(back, g):
            return True
    return False


def test_10_expansion_round_trip(verdict):
    rng = random.Random(10)
    census = {n: enumerate_quintic_tp(n).graphs() for n in (4, 6, 8)}
    census[10] = []
    while len(census[10]) < 40:
        e = random_expansion(rng.choice(census[8]), rng)
        if e is not None:
            census[10].append(e.graph)
    tally = {}
    for order in (6, 8, 10, 12):
        done = fails = 0
        while done < 200:
            g = rng.choice(census[order - 2])
            exp = random_expansion(g, rng, kind=rng.choice("zx"))
            if exp is None:
                continue
            assert is_quintic(exp.graph) and has_triangle_property(exp.graph)
            done += 1
            fails += not _inverted(exp, g)
        tally[order] = fails
    verdict(10, not any(tally.values()), f"failures per order {tally}")
