"""Minor containment, the forbidden-minor scan and related structure tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from ..canonical import canonical_form, is_isomorphic
from ..multigraph import (
    GraphError,
    Multigraph,
    connected_components,
    contract_edge,
    delete_edge,
    full_components,
    is_connected,
    loop_number,
    n_components,
    take_minor,
)


@dataclass
class MinorCertificate:
    deleted: frozenset[str]
    contracted: frozenset[str]

    def verify(self, g: Multigraph, h: Multigraph) -> bool:
        return is_isomorphic(_strip_isolated(take_minor(g, self.deleted, self.contracted)), h)


def _strip_isolated(g: Multigraph) -> Multigraph:
    used = {x for _, u, v in g.edges for x in (u, v)}
    return Multigraph._raw([v for v in g.vertices if v in used], g.edges)


@dataclass
class _Reducer:
    """Minor-preserving simplifications that depend only on the target."""

    simple: bool
    min_degree: int

    def reduce(self, g: Multigraph, dels: set[str], cons: set[str]) -> Multigraph:
        changed = True
        while changed:
            changed = False
            if self.simple:
                seen = set()
                drop = []
                for l, u, v in g.edges:
                    if u == v or (u, v) in seen:
                        drop.append(l)
                    else:
                        seen.add((u, v))
                if drop:
                    dels.update(drop)
                    g = Multigraph._raw(g.vertices, [e for e in g.edges if e[0] not in set(drop)])
                    changed = True
            deg = g.degrees
            iso = [v for v in g.vertices if deg[v] == 0]
            if iso:
                g = g.remove_vertices(iso)
                changed = True
                continue
            if self.min_degree >= 2:
                for v in g.vertices:
                    if deg[v] == 1:
                        e = g.incident(v)[0]
                        cons.add(e)
                        g = contract_edge(g, e)
                        changed = True
                        break
                if changed:
                    continue
            if self.min_degree >= 3 and self.simple:
                for v in g.vertices:
                    if deg[v] == 2 and len(g.incident(v)) == 2:
                        e = g.incident(v)[0]
                        cons.add(e)
                        g = contract_edge(g, e)
                        changed = True
                        break
        return g


def has_minor(g: Multigraph, h: Multigraph, certificate: bool = False):
    """Whether ``h`` is a minor of ``g`` (both without isolated vertices).

    Branches on deleting or contracting each edge, keeping ``g`` connected
    when ``h`` is, with results memoised on canonical forms.  Returns a bool, or
    ``(bool, MinorCertificate | None)`` when ``certificate`` is set.
    """
    h = _strip_isolated(h)
    g0 = _strip_isolated(g)
    simple_h = h.is_simple()
    min_deg = min(h.degrees.values(), default=0)
    red = _Reducer(simple_h, min_deg)
    connected_h = h.n_vertices == 0 or is_connected(h)
    hk = canonical_form(h)
    h_e, h_v = h.n_edges, h.n_vertices
    h_degs = sorted(h.degrees.values(), reverse=True)
    h_loops = sum(1 for _, u, v in h.edges if u == v)
    failed: set[bytes] = set()

    def feasible(x: Multigraph) -> bool:
        if x.n_edges < h_e or x.n_vertices < h_v:
            return False
        if x.n_edges - h_e < x.n_vertices - h_v:
            return False
        if connected_h and h_v and not is_connected(x):
            return False
        degs = sorted(x.degrees.values(), reverse=True)
        # contraction can only merge degrees, so the top degrees of h must be dominated
        # by sums over disjoint groups; a weak check: total degree
        if sum(degs) < sum(h_degs):
            return False
        return True

    def search(x: Multigraph, dels: set[str], cons: set[str]):
        dels, cons = set(dels), set(cons)
        x = red.reduce(x, dels, cons)
        if not feasible(x):
            return None
        if x.n_edges == h_e and x.n_vertices == h_v:
            return (dels, cons) if canonical_form(x) == hk else None
        key = canonical_form(x)
        if key in failed:
            return None
        for l, u, v in x.edges:
            if x.n_vertices > h_v and u != v:
                r = search(contract_edge(x, l), dels, cons | {l})
                if r:
                    return r
            y = delete_edge(x, l)
            if connected_h and u != v and n_components(y) > n_components(x):
                continue
            r = search(y, dels | {l}, cons)
            if r:
                return r
        failed.add(key)
        return None

    res = None
    if h_v == 0:
        res = (set(g0.labels), set())
    else:
        start = g0
        if connected_h and not is_connected(g0):
            for comp in connected_components(g0):
                sub = g0.induced(comp)
                others = set(g0.labels) - set(sub.labels)
                r = search(sub, others, set())
                if r:
                    res = r
                    break
        else:
            res = search(start, set(), set())
    found = res is not None
    if not certificate:
        return found
    if not found:
        return False, None
    dels, cons = res
    # everything left over after matching h is already accounted for
    return True, MinorCertificate(frozenset(dels), frozenset(cons))


# -- forbidden minors --------------------------------------------------------------


def forbidden_targets() -> dict[str, Multigraph]:
    from .builtins import complete, complete_bipartite, cube, graph_h, octahedron

    return {"K5": complete(5), "K33": complete_bipartite(3, 3), "O": octahedron(), "H": graph_h(), "C": cube()}


def forbidden_minor_scan(g: Multigraph) -> set[str]:
    """Tags of the five forbidden graphs that occur as minors of ``g``."""
    return {name for name, h in forbidden_targets().items() if has_minor(g, h)}


# -- S2 gadget ------------------------------------------------------------------------

# Rooted pattern: roots r1, r2, r3 sit on the cut; internal branch sets a, w, b.
# {r1, w} separates r2 from r3, and each root meets two internal branch sets.
S2_ADJACENCY = (
    ("r1", "a"), ("r1", "b"),
    ("r2", "a"), ("r2", "w"),
    ("r3", "b"), ("r3", "w"),
    ("a", "w"), ("w", "b"),
)


def s2_gadget() -> Multigraph:
    """The rooted pattern as a plain graph (roots r1..r3)."""
    return Multigraph.from_edges(
        [(f"s{i + 1}", x, y) for i, (x, y) in enumerate(S2_ADJACENCY)]
    )


def _connected_subsets(adj: dict[str, set[str]], pool: frozenset[str]):
    """All non-empty connected vertex subsets of ``pool``."""
    out = set()
    for start in pool:
        stack = [(frozenset([start]), frozenset(adj[start] & pool))]
        while stack:
            cur, frontier = stack.pop()
            if cur in out:
                continue
            out.add(cur)
            for v in frontier:
                nxt = cur | {v}
                if nxt not in out:
                    stack.append((nxt, (frontier | (adj[v] & pool)) - nxt))
    return out


def _rooted_s2(comp: Multigraph, roots: tuple[str, str, str], interior: frozenset[str]) -> bool:
    adj = {v: comp.neighbours(v) for v in comp.vertices}
    subsets = sorted(_connected_subsets(adj, interior), key=len)

    def touches(a: frozenset[str], b) -> bool:
        return any(adj[x] & b for x in a)

    for r1, r2, r3 in permutations(roots):
        for w in subsets:
            if not (touches(w, {r2}) and touches(w, {r3})):
                continue
            rest = interior - w
            for a in subsets:
                if not a <= rest or not (touches(a, w) and touches(a, {r1}) and touches(a, {r2})):
                    continue
                for b in subsets:
                    if b <= rest - a and touches(b, w) and touches(b, {r1}) and touches(b, {r3}):
                        return True
    return False


def has_well_connected_s2(g: Multigraph, cut) -> bool:
    """Whether some full component of the 3-vertex cut holds the rooted S2 gadget.

    The cut vertices must be the gadget's three roots; internal branch sets
    live strictly inside the component.
    """
    cut = tuple(cut)
    if len(set(cut)) != 3 or not set(cut) <= set(g.vertices):
        raise GraphError("cut must be 3 distinct vertices of the graph")
    rest = g.remove_vertices(cut)
    if rest.n_vertices == 0 or n_components(rest) < 2:
        raise GraphError("vertices do not separate the graph")
    for fc in full_components(g, cut):
        if len(fc.interior) >= 3 and _rooted_s2(fc.component, cut, fc.interior):
            return True
    return False


# -- primitive divergence --------------------------------------------------------------


@dataclass
class DivergenceReport:
    primitive: bool
    reason: str = ""
    subgraph: tuple[str, ...] = field(default_factory=tuple)  # edge labels of a violating subgraph


def primitive_divergent(g: Multigraph) -> DivergenceReport:
    """``|E| = 2h`` and every connected induced proper subgraph has ``|E| < 2|V| - 2``."""
    h = loop_number(g)
    if g.n_edges != 2 * h:
        return DivergenceReport(False, f"|E| = {g.n_edges} but 2h = {2 * h}", tuple(g.labels))
    verts = g.vertices
    for size in range(1, len(verts) + 1):
        for vs in combinations(verts, size):
            sub = g.induced(vs)
            if sub.n_edges == 0 or (size == len(verts) and sub.n_edges == g.n_edges):
                continue
            if not is_connected(sub):
                continue
            if sub.n_edges >= 2 * sub.n_vertices - 2:
                return DivergenceReport(
                    False,
                    f"subgraph on {', '.join(vs)} has {sub.n_edges} edges",
                    tuple(sub.labels),
                )
    return DivergenceReport(True)
