"""Undirected multigraphs with labelled edges.

Loops and parallel edges are allowed.  Vertices are string tokens and every
edge carries a unique string label; both are kept in a deterministic sorted
order so that structurally equal inputs produce identical internal layouts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

LABEL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.]*$")
TOKEN_RE = re.compile(r"^[A-Za-z0-9_.:]+$")


class GraphError(ValueError):
    """Raised for invalid graph construction or operations."""


def sort_key(token: str) -> tuple:
    """Natural sort key: ``e2`` sorts before ``e10``."""
    parts = re.split(r"(\d+)", token)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


def sorted_tokens(tokens: Iterable[str]) -> list[str]:
    return sorted(tokens, key=sort_key)


@dataclass(frozen=True)
class Multigraph:
    """An immutable multigraph.

    ``edges`` is a tuple of ``(label, u, v)`` with ``u <= v`` in sort order;
    a loop has ``u == v``.  Use :meth:`from_edges` to build one.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not self._check:
            return
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertex token")
        for v in self.vertices:
            if not TOKEN_RE.match(v):
                raise GraphError(f"invalid vertex token {v!r}")
        seen = set()
        for label, u, v in self.edges:
            if not LABEL_RE.match(label):
                raise GraphError(f"invalid edge label {label!r}")
            if label in seen:
                raise GraphError(f"duplicate edge label {label!r}")
            seen.add(label)
            if u not in vs or v not in vs:
                raise GraphError(f"edge {label} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str, str]],
        vertices: Iterable[str] = (),
    ) -> "Multigraph":
        """Build a graph from ``(label, u, v)`` triples plus optional extra vertices."""
        edges = list(edges)
        vs = set(vertices)
        norm = []
        for label, u, v in edges:
            u, v = str(u), str(v)
            vs.add(u)
            vs.add(v)
            if sort_key(v) < sort_key(u):
                u, v = v, u
            norm.append((str(label), u, v))
        norm.sort(key=lambda t: sort_key(t[0]))
        return cls(tuple(sorted_tokens(vs)), tuple(norm))

    @classmethod
    def _raw(cls, vertices, edges) -> "Multigraph":
        # trusted constructor: inputs already normalised
        return cls(tuple(vertices), tuple(edges), _check=False)

    # -- basic accessors -------------------------------------------------

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    @cached_property
    def edge_map(self) -> dict[str, tuple[str, str]]:
        return {label: (u, v) for label, u, v in self.edges}

    @cached_property
    def vindex(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def eindex(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.labels)}

    @cached_property
    def int_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as vertex-index pairs, in label order."""
        vi = self.vindex
        return tuple((vi[u], vi[v]) for _, u, v in self.edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def ends(self, label: str) -> tuple[str, str]:
        try:
            return self.edge_map[label]
        except KeyError:
            raise GraphError(f"no such edge {label!r}") from None

    def is_loop(self, label: str) -> bool:
        u, v = self.ends(label)
        return u == v

    def degree(self, v: str) -> int:
        """Degree counting a loop twice."""
        return sum((a == v) + (b == v) for _, a, b in self.edges)

    @cached_property
    def degrees(self) -> dict[str, int]:
        deg = {v: 0 for v in self.vertices}
        for _, u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbours(self, v: str) -> set[str]:
        out = set()
        for _, a, b in self.edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def incident(self, v: str) -> list[str]:
        return [label for label, a, b in self.edges if a == v or b == v]

    def is_simple(self) -> bool:
        pairs = set()
        for _, u, v in self.edges:
            if u == v or (u, v) in pairs:
                return False
            pairs.add((u, v))
        return True

    def has_loops(self) -> bool:
        return any(u == v for _, u, v in self.edges)

    def edges_between(self, u: str, v: str) -> list[str]:
        if sort_key(v) < sort_key(u):
            u, v = v, u
        return [label for label, a, b in self.edges if a == u and b == v]

    def relabel(self, vertex_map=None, edge_map=None) -> "Multigraph":
        vm = vertex_map or {}
        em = edge_map or {}
        return Multigraph.from_edges(
            ((em.get(l, l), vm.get(u, u), vm.get(v, v)) for l, u, v in self.edges),
            vertices=(vm.get(v, v) for v in self.vertices),
        )

    def subgraph_edges(self, labels: Iterable[str], keep_vertices: bool = True) -> "Multigraph":
        """Spanning (or edge-induced when ``keep_vertices`` is false) subgraph."""
        keep = set(labels)
        es = [e for e in self.edges if e[0] in keep]
        if keep_vertices:
            return Multigraph._raw(self.vertices, es)
        used = {x for _, u, v in es for x in (u, v)}
        return Multigraph._raw([v for v in self.vertices if v in used], es)

    def induced(self, verts: Iterable[str]) -> "Multigraph":
        vs = set(verts)
        es = [e for e in self.edges if e[1] in vs and e[2] in vs]
        return Multigraph._raw([v for v in self.vertices if v in vs], es)

    def remove_vertices(self, verts: Iterable[str]) -> "Multigraph":
        drop = set(verts)
        return self.induced(v for v in self.vertices if v not in drop)

    def __str__(self) -> str:
        body = ", ".join(f"{l}:{u}-{v}" for l, u, v in self.edges)
        return f"Multigraph(|V|={self.n_vertices}, |E|={self.n_edges}; {body})"


# -- minors --------------------------------------------------------------


def delete_edge(g: Multigraph, e: str) -> Multigraph:
    g.ends(e)
    return Multigraph._raw(g.vertices, [x for x in g.edges if x[0] != e])


def contract_edge(g: Multigraph, e: str) -> Multigraph:
    """Contract ``e``; the merged vertex keeps the smaller token.

    Parallel edges and loops created by the merge are kept.  Contracting a loop
    removes it, exactly as deleting would.
    """
    u, v = g.ends(e)
    if u == v:
        return delete_edge(g, e)
    # u < v by normalisation, so v is absorbed into u
    es = []
    for label, a, b in g.edges:
        if label == e:
            continue
        a = u if a == v else a
        b = u if b == v else b
        if sort_key(b) < sort_key(a):
            a, b = b, a
        es.append((label, a, b))
    return Multigraph._raw([x for x in g.vertices if x != v], es)


def take_minor(g: Multigraph, delete: Iterable[str] = (), contract: Iterable[str] = ()) -> Multigraph:
    """Delete then contract the given edge sets.

    The result does not depend on the order inside either set: each merged
    vertex class is named by its smallest token.
    """
    delete, contract = set(delete), set(contract)
    if delete & contract:
        raise GraphError(f"edges both deleted and contracted: {sorted_tokens(delete & contract)}")
    for e in delete | contract:
        g.ends(e)
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for label, a, b in g.edges:
        if label in contract:
            ra, rb = find(a), find(b)
            if ra != rb:
                if sort_key(rb) < sort_key(ra):
                    ra, rb = rb, ra
                parent[rb] = ra
    es = []
    for label, a, b in g.edges:
        if label in delete or label in contract:
            continue
        a, b = find(a), find(b)
        if sort_key(b) < sort_key(a):
            a, b = b, a
        es.append((label, a, b))
    return Multigraph._raw([v for v in g.vertices if find(v) == v], es)


# -- connectivity ----------------------------------------------------------


def _components_idx(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(i) for i in range(n)]


def connected_components(g: Multigraph) -> list[frozenset[str]]:
    """Vertex sets of the connected components, ordered by smallest token."""
    roots = _components_idx(g.n_vertices, g.int_edges)
    groups: dict[int, list[str]] = {}
    for i, r in enumerate(roots):
        groups.setdefault(r, []).append(g.vertices[i])
    return [frozenset(vs) for vs in groups.values()]


def n_components(g: Multigraph) -> int:
    return len(set(_components_idx(g.n_vertices, g.int_edges)))


def is_connected(g: Multigraph) -> bool:
    return g.n_vertices > 0 and n_components(g) == 1


def loop_number(g: Multigraph) -> int:
    """First Betti number |E| - |V| + k."""
    return g.n_edges - g.n_vertices + n_components(g)


def is_bridge(g: Multigraph, e: str) -> bool:
    u, v = g.ends(e)
    if u == v:
        return False
    return n_components(delete_edge(g, e)) > n_components(g)


def _separates(g: Multigraph, cut: Iterable[str]) -> bool:
    rest = g.remove_vertices(cut)
    return rest.n_vertices <= 1 or n_components(rest) > 1


def vertex_connectivity_le(g: Multigraph, k: int) -> frozenset[str] | None:
    """Smallest vertex cut of size at most ``k``, or ``None``.

    A cut either disconnects the graph or leaves at most one vertex.  The search
    is exhaustive over vertex subsets, which is fine at desk scale.
    """
    if not 1 <= k <= 4:
        raise GraphError("k must be in 1..4")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    for size in range(1, k + 1):
        if size > g.n_vertices - 1:
            break
        for cut in combinations(g.vertices, size):
            if _separates(g, cut):
                return frozenset(cut)
    return None


def vertex_connectivity(g: Multigraph, cap: int = 4) -> int:
    """kappa(g) capped at ``cap + 1`` (meaning "more than cap")."""
    if not is_connected(g):
        return 0
    cut = vertex_connectivity_le(g, cap)
    if cut is None:
        return min(cap + 1, g.n_vertices - 1)
    return len(cut)


def separating_sets(g: Multigraph, size: int) -> list[frozenset[str]]:
    """All vertex sets of exactly ``size`` whose removal leaves >= 2 components."""
    out = []
    for cut in combinations(g.vertices, size):
        rest = g.remove_vertices(cut)
        if rest.n_vertices >= 2 and n_components(rest) > 1:
            out.append(frozenset(cut))
    return out


@dataclass(frozen=True)
class FullComponent:
    cut: frozenset[str]
    component: Multigraph
    interior: frozenset[str]


def full_components(g: Multigraph, cut: Iterable[str]) -> list[FullComponent]:
    """One full component per connected component of ``g - cut``.

    Edges joining two cut vertices (and loops at cut vertices) are copied into
    every full component.
    """
    cut = frozenset(cut)
    rest = g.remove_vertices(cut)
    out = []
    for comp in connected_components(rest):
        verts = comp | cut
        es = [
            e
            for e in g.edges
            if (e[1] in comp or e[2] in comp) or (e[1] in cut and e[2] in cut)
        ]
        sub = Multigraph._raw([v for v in g.vertices if v in verts], es)
        out.append(FullComponent(cut, sub, frozenset(comp)))
    return out


# -- spanning trees ----------------------------------------------------------


def _spanning_tree_indices(n: int, edges: list[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Yield index tuples of edges forming spanning trees on ``n`` vertices."""
    need = n - 1
    m = len(edges)
    if need < 0:
        return
    if need == 0:
        yield ()
        return

    chosen: list[int] = []

    def rec(i: int, parent: list[int]):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if m - i < need - len(chosen):
            return
        a, b = edges[i]

        def find(p, x):
            while p[x] != x:
                x = p[x]
            return x

        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            p2 = parent.copy()
            p2[ra] = rb
            chosen.append(i)
            yield from rec(i + 1, p2)
            chosen.pop()
        yield from rec(i + 1, parent)

    yield from rec(0, list(range(n)))


def spanning_trees(g: Multigraph) -> Iterator[frozenset[str]]:
    """Enumerate spanning trees as edge-label sets (none if disconnected)."""
    if g.n_vertices == 0:
        return
    labels = g.labels
    for idx in _spanning_tree_indices(g.n_vertices, list(g.int_edges)):
        yield frozenset(labels[i] for i in idx)


def count_spanning_trees(g: Multigraph) -> int:
    return sum(1 for _ in _spanning_tree_indices(g.n_vertices, list(g.int_edges)))


def is_spanning_tree(g: Multigraph, t: Iterable[str]) -> bool:
    t = set(t)
    if not t <= set(g.labels) or len(t) != g.n_vertices - 1:
        return False
    return is_connected(g.subgraph_edges(t))
