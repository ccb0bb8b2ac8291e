from __future__ import annotations

import pytest
from hypothesis import strategies as st

from quintri.construct import base_graphs, complete_graph, ring_of_k4s
from quintri.enumeration import enumerate_quintic_tp
from quintri.mgraph import Multigraph


@pytest.fixture(scope="session")
def census():
    """Connected quintic triangle-property classes by order."""
    return {n: enumerate_quintic_tp(n).graphs() for n in (4, 6, 8)}


@pytest.fixture(scope="session")
def k6() -> Multigraph:
    return complete_graph(6)


@pytest.fixture(scope="session")
def bases() -> dict[str, Multigraph]:
    return dict(zip(("4a", "4b", "6a", "6b"), base_graphs()))


@pytest.fixture(scope="session")
def ring() -> Multigraph:
    return ring_of_k4s(5)


@st.composite
def multigraphs(draw, max_order: int = 7, max_mult: int = 3) -> Multigraph:
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph(n, [(u, v, k) for (u, v), k in zip(pairs, mults) if k])


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))
