"""Delta-wye exchanges and the families they generate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..canonical import canonical_form
from ..multigraph import GraphError, Multigraph, sort_key


class FamilyCapError(RuntimeError):
    def __init__(self, msg: str, partial: dict):
        super().__init__(msg)
        self.partial = partial


@dataclass(frozen=True)
class DeltaYSite:
    kind: str  # "triangle" or "star"
    edges: tuple[str, str, str]
    vertices: tuple[str, ...]  # triangle corners, or the star centre alone


def _fresh(existing: Iterable[str], prefix: str) -> str:
    taken = set(existing)
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def _fresh_many(existing: Iterable[str], prefix: str, k: int) -> list[str]:
    taken = set(existing)
    out = []
    i = 1
    while len(out) < k:
        if f"{prefix}{i}" not in taken:
            out.append(f"{prefix}{i}")
        i += 1
    return out


def triangle_sites(g: Multigraph) -> list[DeltaYSite]:
    """Triangles on three distinct vertices with no other edge among them."""
    out = []
    for a, b, c in combinations(g.vertices, 3):
        es = [l for l, u, v in g.edges if u in (a, b, c) and v in (a, b, c)]
        if len(es) != 3:
            continue
        pairs = {frozenset(g.ends(l)) for l in es}
        if len(pairs) == 3 and all(len(p) == 2 for p in pairs):
            out.append(DeltaYSite("triangle", tuple(es), (a, b, c)))
    return out


def star_sites(g: Multigraph) -> list[DeltaYSite]:
    """Degree-3 vertices whose three edges go to three distinct neighbours."""
    out = []
    for v in g.vertices:
        es = g.incident(v)
        if len(es) != 3 or g.degrees[v] != 3:
            continue
        nbrs = {g.ends(l)[0] if g.ends(l)[1] == v else g.ends(l)[1] for l in es}
        if len(nbrs) == 3 and v not in nbrs:
            out.append(DeltaYSite("star", tuple(es), (v,)))
    return out


def delta_to_y(g: Multigraph, triangle: Iterable[str], centre: str | None = None, new_labels=None) -> Multigraph:
    """Replace a triangle by a new degree-3 vertex joined to its corners."""
    tri = tuple(triangle)
    site = next((s for s in triangle_sites(g) if set(s.edges) == set(tri)), None)
    if site is None:
        raise GraphError(f"not a triangle site: {','.join(tri)}")
    y = centre or _fresh(g.vertices, "y")
    if y in g.vertices:
        raise GraphError(f"vertex {y!r} already exists")
    labels = new_labels or _fresh_many(g.labels, "f", 3)
    keep = [e for e in g.edges if e[0] not in set(tri)]
    new = [(l, x, y) for l, x in zip(labels, site.vertices)]
    return Multigraph.from_edges(keep + new, vertices=g.vertices)


def y_to_delta(g: Multigraph, centre: str, new_labels=None) -> Multigraph:
    """Remove a degree-3 vertex and join its three neighbours pairwise.

    Parallel edges created this way are kept.
    """
    site = next((s for s in star_sites(g) if s.vertices[0] == centre), None)
    if site is None:
        raise GraphError(f"not a star site: {centre}")
    nbrs = sorted({x for l in site.edges for x in g.ends(l) if x != centre}, key=sort_key)
    labels = new_labels or _fresh_many(g.labels, "f", 3)
    keep = [e for e in g.edges if e[0] not in set(site.edges)]
    new = [(l, a, b) for l, (a, b) in zip(labels, combinations(nbrs, 2))]
    return Multigraph.from_edges(keep + new, vertices=[v for v in g.vertices if v != centre])


def neighbours(g: Multigraph) -> list[Multigraph]:
    """All graphs one exchange away, in site order."""
    out = [delta_to_y(g, s.edges) for s in triangle_sites(g)]
    out += [y_to_delta(g, s.vertices[0]) for s in star_sites(g)]
    return out


def _tidy(g: Multigraph) -> Multigraph:
    """Rename vertices v1.. and edges e1.. in a stable order."""
    vm = {v: f"v{i + 1}" for i, v in enumerate(g.vertices)}
    em = {l: f"e{i + 1}" for i, l in enumerate(g.labels)}
    return g.relabel(vm, em)


def delta_y_family(g: Multigraph, cap: int = 2000) -> dict[bytes, Multigraph]:
    """Closure of ``g`` under exchanges, one representative per isomorphism class.

    Representatives are relabelled ``v1..``/``e1..``.  Raises
    :class:`FamilyCapError` (carrying the partial family) past ``cap`` members.
    """
    start = _tidy(g)
    seen = {canonical_form(start): start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        for nb in neighbours(h):
            nb = _tidy(nb)
            key = canonical_form(nb)
            if key not in seen:
                seen[key] = nb
                if len(seen) > cap:
                    raise FamilyCapError(f"family exceeds cap {cap}", seen)
                queue.append(nb)
    return seen
