"""Named graphs."""

from __future__ import annotations

from itertools import combinations

from ..multigraph import GraphError, Multigraph


def from_pairs(pairs, n_vertices: int | None = None) -> Multigraph:
    """Vertices ``v1..`` and edges ``e1..`` numbered in the given pair order."""
    verts = [f"v{i}" for i in range(1, (n_vertices or 0) + 1)]
    return Multigraph.from_edges(
        [(f"e{i + 1}", f"v{a}", f"v{b}") for i, (a, b) in enumerate(pairs)], vertices=verts
    )


def complete(n: int) -> Multigraph:
    return from_pairs(combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return from_pairs([(x, y) for x in range(1, a + 1) for y in range(a + 1, a + b + 1)])


def octahedron() -> Multigraph:
    matching = ({1, 2}, {3, 4}, {5, 6})
    return from_pairs([(a, b) for a, b in combinations(range(1, 7), 2) if {a, b} not in matching])


def cube() -> Multigraph:
    pairs = [(a + 1, b + 1) for a, b in combinations(range(8), 2) if bin(a ^ b).count("1") == 1]
    return from_pairs(pairs)


def c4_chord() -> Multigraph:
    """4-cycle v1 v2 v4 v3 with chord e5 = v2v3."""
    return from_pairs([(1, 2), (1, 3), (2, 4), (3, 4), (2, 3)])


def zigzag(n: int) -> Multigraph:
    """Path 1..n+4 with all edges i~i+1 and i~i+2, plus an edge joining the ends.

    This is the square of a cycle on n+5 vertices with one vertex removed:
    ``n`` vertices of degree 4, four of degree 3, ``2n + 6`` edges.
    """
    if n < 0:
        raise GraphError("zigzag needs n >= 0")
    k = n + 4
    pairs = [(i, i + 1) for i in range(1, k)] + [(i, i + 2) for i in range(1, k - 1)] + [(1, k)]
    return from_pairs(sorted(pairs))


def sq_odd_cycle(k: int) -> Multigraph:
    """Square of the cycle on ``2k + 1`` vertices."""
    if k < 2:
        raise GraphError("sq_odd_cycle needs k >= 2")
    n = 2 * k + 1
    pairs = set()
    for i in range(n):
        for d in (1, 2):
            a, b = i + 1, (i + d) % n + 1
            pairs.add((min(a, b), max(a, b)))
    return from_pairs(sorted(pairs))


def _tidy(g: Multigraph) -> Multigraph:
    from .deltay import _tidy as tidy

    return tidy(g)


def graph_h() -> Multigraph:
    """Octahedron with one face triangle exchanged for a degree-3 vertex."""
    from .deltay import delta_to_y

    o = octahedron()
    tri = [o.edges_between("v1", "v3")[0], o.edges_between("v1", "v5")[0], o.edges_between("v3", "v5")[0]]
    return _tidy(delta_to_y(o, tri))


def graph_q() -> Multigraph:
    """Five-vertex, twelve-edge member of the octahedron's delta-wye family.

    It is the only minor-minimal non-splitting member of that family whose
    non-splitting 5-configurations form a single orbit (24 of them).
    """
    return from_pairs(
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (2, 4), (2, 5), (4, 5), (1, 4), (1, 5), (4, 5)]
    )


def prism_doubled_rungs() -> Multigraph:
    """Triangular prism v1v3v5 / v2v4v6 with each of the three rungs doubled.

    Minor-minimal non-splitting, non-simple, and outside the delta-wye
    families of K5, K3,3 and the octahedron.
    """
    return from_pairs(
        [(1, 2), (1, 2), (3, 4), (3, 4), (5, 6), (5, 6), (1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6)]
    )


def prism_doubled_rungs_dual() -> Multigraph:
    """Planar dual of :func:`prism_doubled_rungs`.

    The triangular bipyramid with its three equator edges subdivided, so it
    is simple but has 2-vertex cuts.  Also minor-minimal non-splitting.
    """
    from .planar import planar_dual

    return _tidy(planar_dual(prism_doubled_rungs()))
