"""Edge orderings of splitting 3-connected graphs via nested 3-vertex cuts."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..multigraph import GraphError, Multigraph, full_components, n_components, vertex_connectivity
from ..splitting import graph_splits
from .minors import has_well_connected_s2


@dataclass
class OrderingResult:
    order: list[str] | None
    method: str = ""
    cut: tuple[str, ...] | None = None
    diagnostics: list[str] = field(default_factory=list)


def _vertices_of(g: Multigraph, labels) -> set[str]:
    return {x for l in labels for x in g.ends(l)}


def ordering_is_valid(g: Multigraph, order: list[str]) -> bool:
    """For 3 <= i <= n-3 the first i edges meet the remaining ones in exactly 3 vertices."""
    n = len(order)
    if sorted(order) != sorted(g.labels):
        return False
    for i in range(3, n - 2):
        if len(_vertices_of(g, order[:i]) & _vertices_of(g, order[i:])) != 3:
            return False
    return True


def _peel(g: Multigraph, cut: tuple[str, ...], interior: set[str]) -> list[str] | None:
    """Order the edges of one full component by shrinking the cut inwards.

    At each stage one cut vertex has a single neighbour inside; edges joining
    cut vertices go first, then the edge into the interior, and that
    neighbour replaces the cut vertex.
    """
    placed: list[str] = []
    done: set[str] = set()
    cut = list(cut)
    interior = set(interior)
    comp_edges = {l for l, u, v in g.edges if (u in interior or v in interior)}
    comp_edges |= {l for l, u, v in g.edges if u in cut and v in cut}
    while len(interior) > 1:
        pick = None
        for x in cut:
            inside = [l for l in g.incident(x) if l in comp_edges and l not in done and (set(g.ends(l)) - {x}) & interior]
            nbrs = {y for l in inside for y in g.ends(l) if y != x}
            if len(nbrs) == 1:
                pick = (x, inside, nbrs.pop())
                break
        if pick is None:
            return None
        x, inside, u = pick
        for l, a, b in g.edges:
            if l in comp_edges and l not in done and a in cut and b in cut:
                placed.append(l)
                done.add(l)
        for l in inside:
            placed.append(l)
            done.add(l)
        cut = [u if y == x else y for y in cut]
        interior.discard(u)
    last = [l for l in g.labels if l in comp_edges and l not in done]
    # joining edges of the final cut precede the three star edges
    placed.extend(l for l in last if not set(g.ends(l)) & interior)
    placed.extend(l for l in last if set(g.ends(l)) & interior)
    return placed


def _search_order(g: Multigraph) -> list[str] | None:
    """Depth-first search over prefixes with memoised dead ends."""
    labels = list(g.labels)
    n = len(labels)
    ends = [set(g.ends(l)) for l in labels]
    dead: set[int] = set()
    order: list[int] = []

    def boundary_ok(mask: int, i: int) -> bool:
        if not 3 <= i <= n - 3:
            return True
        a = set().union(*(ends[j] for j in range(n) if mask >> j & 1))
        b = set().union(*(ends[j] for j in range(n) if not mask >> j & 1))
        return len(a & b) == 3

    def rec(mask: int) -> bool:
        i = len(order)
        if i == n:
            return True
        if mask in dead:
            return False
        for j in range(n):
            if mask >> j & 1:
                continue
            m2 = mask | (1 << j)
            if not boundary_ok(m2, i + 1):
                continue
            order.append(j)
            if rec(m2):
                return True
            order.pop()
        dead.add(mask)
        return False

    if rec(0):
        return [labels[j] for j in order]
    return None


def three_cut_edge_ordering(g: Multigraph, check_splits: bool = True) -> OrderingResult:
    """Edge ordering whose prefixes each meet their complement in three vertices.

    Requires ``g`` simple, 3-connected and splitting.  Picks a 3-vertex cut
    where neither full component carries a well-connected S2 gadget, peels
    both sides inwards, reverses the first and appends the second.  If the
    peeling gets stuck the ordering is found by a direct prefix search
    instead, and the result says so.
    """
    if not g.is_simple():
        raise GraphError("precondition: graph must be simple")
    if vertex_connectivity(g, 3) < 3:
        raise GraphError("precondition: graph must be 3-connected")
    if check_splits and not graph_splits(g):
        raise GraphError("precondition: graph does not split")
    res = OrderingResult(None)
    for cut in combinations(g.vertices, 3):
        rest = g.remove_vertices(cut)
        if rest.n_vertices < 2 or n_components(rest) != 2:
            continue
        if has_well_connected_s2(g, cut):
            res.diagnostics.append(f"cut {' '.join(cut)}: a side has a well-connected S2")
            continue
        fcs = full_components(g, cut)
        first = _peel(g, cut, set(fcs[0].interior))
        second = _peel(g, cut, set(fcs[1].interior))
        if first is None or second is None:
            res.diagnostics.append(f"cut {' '.join(cut)}: peeling stuck")
            continue
        order = list(reversed(first)) + [l for l in second if l not in set(first)]
        if ordering_is_valid(g, order):
            res.order, res.method, res.cut = order, "nested-cuts", tuple(cut)
            return res
        res.diagnostics.append(f"cut {' '.join(cut)}: peeled order fails the check")
    if not any("S2" not in d for d in res.diagnostics) and res.diagnostics:
        res.diagnostics.append("no 3-vertex cut free of well-connected S2 gadgets")
        return res
    order = _search_order(g)
    if order is not None:
        res.order, res.method = order, "prefix-search"
    else:
        res.diagnostics.append("no valid ordering exists")
    return res
