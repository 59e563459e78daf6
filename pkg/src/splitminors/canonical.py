"""Canonical forms for coloured multigraphs.

Colour refinement followed by individualisation, with orbit pruning from the
automorphisms met along the way.  Edge multiplicities and edge colours are
folded into the adjacency entries, so the form distinguishes a double edge
from a single one and respects loops.
"""

from __future__ import annotations

from typing import Hashable, Mapping

from .multigraph import Multigraph

Partition = list[list[int]]


def _refine(cells: Partition, nbrs: list[dict[int, tuple]]) -> Partition:
    """Refine an ordered partition to an equitable one (label-invariant)."""
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new: Partition = []
        changed = False
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new.append(cell)
                continue
            sigs = {}
            for v in cell:
                sig = tuple(sorted((where[w], col) for w, col in nbrs[v].items()))
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                new.append(cell)
                continue
            changed = True
            for sig in sorted(sigs):
                new.append(sigs[sig])
        cells = new
        if not changed:
            return cells


def _individualise(cells: Partition, ci: int, v: int) -> Partition:
    cell = cells[ci]
    rest = [w for w in cell if w != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


class _Search:
    def __init__(self, n, vcols, nbrs, loops):
        self.n = n
        self.vcols = vcols
        self.nbrs = nbrs
        self.loops = loops
        self.best_key = None
        self.best_order = None
        self.first_key = None
        self.first_order = None
        self.autos: list[list[int]] = []

    def encode(self, order: list[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for i, v in enumerate(order):
            row = tuple(sorted((pos[w], col) for w, col in self.nbrs[v].items() if pos[w] > i))
            rows.append((self.vcols[v], self.loops[v], row))
        return tuple(rows)

    def leaf(self, order: list[int]):
        key = self.encode(order)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
        for ref_key, ref_order in ((self.first_key, self.first_order), (self.best_key, self.best_order)):
            if ref_key is not None and key == ref_key and order != ref_order:
                perm = [0] * self.n
                for a, b in zip(ref_order, order):
                    perm[a] = b
                self.autos.append(perm)
                break
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_order = key, order

    def run(self, cells: Partition, fixed: list[int]):
        cells = _refine(cells, self.nbrs)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf([c[0] for c in cells])
            return
        done: set[int] = set()
        for v in sorted(cells[target]):
            if v in done:
                continue
            self.run(_individualise(cells, target, v), fixed + [v])
            done |= self._orbit(v, fixed)

    def _orbit(self, v: int, fixed: list[int]) -> set[int]:
        gens = [p for p in self.autos if all(p[x] == x for x in fixed)]
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return orbit


def _prepare(g: Multigraph, edge_colors, vertex_colors):
    n = g.n_vertices
    vi = g.vindex
    multi: list[dict[int, list]] = [dict() for _ in range(n)]
    loops: list[list] = [[] for _ in range(n)]
    for label, u, v in g.edges:
        col = edge_colors.get(label, 0) if edge_colors else 0
        a, b = vi[u], vi[v]
        if a == b:
            loops[a].append(col)
        else:
            multi[a].setdefault(b, []).append(col)
            multi[b].setdefault(a, []).append(col)
    nbrs = [{w: tuple(sorted(cols)) for w, cols in m.items()} for m in multi]
    loops_t = [tuple(sorted(c)) for c in loops]
    vcols = [
        (vertex_colors.get(v, 0) if vertex_colors else 0) for v in g.vertices
    ]
    return n, vcols, nbrs, loops_t


def _search(g, edge_colors=None, vertex_colors=None) -> _Search:
    n, vcols, nbrs, loops = _prepare(g, edge_colors, vertex_colors)
    s = _Search(n, vcols, nbrs, loops)
    init: dict = {}
    for v in range(n):
        key = (vcols[v], loops[v], len(nbrs[v]), sum(len(c) for c in nbrs[v].values()))
        init.setdefault(key, []).append(v)
    cells = [init[k] for k in sorted(init)]
    if n:
        s.run(cells, [])
    else:
        s.best_key, s.best_order = (), []
    return s


def canonical_form(
    g: Multigraph,
    edge_colors: Mapping[str, Hashable] | None = None,
    vertex_colors: Mapping[str, Hashable] | None = None,
) -> bytes:
    """Relabelling-invariant byte string; equal iff the graphs are isomorphic.

    Optional colour maps make the form respect edge or vertex markings (used
    for orbits of edge subsets).
    """
    s = _search(g, edge_colors, vertex_colors)
    return repr((g.n_vertices, g.n_edges, s.best_key)).encode()


def canonical_order(g: Multigraph) -> list[str]:
    """Vertices listed in canonical order."""
    s = _search(g)
    return [g.vertices[i] for i in s.best_order]


def is_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    if (g1.n_vertices, g1.n_edges) != (g2.n_vertices, g2.n_edges):
        return False
    if sorted(g1.degrees.values()) != sorted(g2.degrees.values()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def automorphism_generators(g: Multigraph) -> list[dict[str, str]]:
    """Vertex automorphisms met during the canonical search.

    Each one is a genuine automorphism; together they need not generate the
    whole group.
    """
    s = _search(g)
    return [{g.vertices[i]: g.vertices[p[i]] for i in range(len(p))} for p in s.autos]
