import random

import pytest
from hypothesis import assume, strategies as st

from splitminors.multigraph import Multigraph, is_connected
from splitminors.structure import builtin
from splitminors.structure.builtins import from_pairs


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8, min_edges=0, loops=True, connected=False):
    n = draw(st.integers(1 if loops else 2, max_vertices))
    m = draw(st.integers(min_edges, max_edges))
    pair = st.tuples(st.integers(1, n), st.integers(1, n))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(pair, min_size=m, max_size=m)) if m else []
    g = from_pairs(pairs, n)
    if connected:
        assume(is_connected(g))
    return g


def random_multigraph(rng: random.Random, n: int, m: int, loops: bool = True) -> Multigraph:
    pairs = []
    for _ in range(m):
        a = rng.randint(1, n)
        b = rng.randint(1, n)
        if not loops:
            while b == a:
                b = rng.randint(1, n)
        pairs.append((a, b))
    return from_pairs(pairs, n)


def small_corpus() -> dict[str, Multigraph]:
    """Named graphs with at most 8 edges plus seeded random multigraphs."""
    out = {
        "K4": builtin("K4"),
        "C4chord": builtin("C4chord"),
        "triangle": from_pairs([(1, 2), (1, 3), (2, 3)]),
        "triangle-doubled": from_pairs([(1, 2), (1, 2), (1, 3), (2, 3), (2, 3)]),
        "triangle-tripled": from_pairs([(1, 2), (1, 2), (1, 2), (1, 3), (2, 3), (1, 3)]),
        "triangle-loop": from_pairs([(1, 2), (1, 3), (2, 3), (2, 2)]),
        "zigzag1": builtin("zigzag(1)"),
    }
    rng = random.Random(20241017)
    for i in range(12):
        n = rng.randint(2, 5)
        out[f"random{i}"] = random_multigraph(rng, n, rng.randint(3, 8))
    return out


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
