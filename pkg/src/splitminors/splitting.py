"""Splitting of 5-configurations and graphs.

A Dodgson vanishes exactly when its two minors share no spanning tree.  That is
a common-base question for two graphic matroids on the same ground set, which
:func:`dodgson_is_zero` answers with the textbook augmenting-path matroid
intersection.  No signs are needed anywhere in this module.

Structural shortcuts recognise many splitting configurations without running
any intersection; they are all consequences of one of the two minors being
disconnected or having a cycle contracted.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .canonical import canonical_form
from .kirchhoff import (
    DodgsonSpec,
    common_spanning_trees,
    dodgson_minors,
    dodgson_parts,
    enumerate_dodgson_specs,
    _is_forest,
)
from .multigraph import (
    GraphError,
    Multigraph,
    _components_idx,
    contract_edge,
    delete_edge,
    full_components,
    n_components,
    sorted_tokens,
)

SHORTCUT_TAGS = (
    "small-edge-cut-in-S",
    "small-cycle-in-S",
    "two-cut-distribution",
    "three-cut-distribution",
)


# -- matroid intersection ---------------------------------------------------------


class _Forest:
    """A forest on ``n`` vertices used to answer exchange queries."""

    def __init__(self, n: int, ends: list[tuple[int, int]], members: Iterable[int]):
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in members:
            a, b = ends[i]
            self.adj[a].append((b, i))
            self.adj[b].append((a, i))
        self.comp = [-1] * n
        self.parent = [(-1, -1)] * n
        self.depth = [0] * n
        for r in range(n):
            if self.comp[r] >= 0:
                continue
            self.comp[r] = r
            stack = [r]
            while stack:
                x = stack.pop()
                for y, i in self.adj[x]:
                    if self.comp[y] < 0:
                        self.comp[y] = r
                        self.parent[y] = (x, i)
                        self.depth[y] = self.depth[x] + 1
                        stack.append(y)

    def path(self, a: int, b: int) -> list[int] | None:
        """Edge indices on the forest path, or ``None`` if a and b are disconnected."""
        if self.comp[a] != self.comp[b]:
            return None
        out = []
        while self.depth[a] > self.depth[b]:
            a, i = self.parent[a]
            out.append(i)
        while self.depth[b] > self.depth[a]:
            b, i = self.parent[b]
            out.append(i)
        while a != b:
            a, i = self.parent[a]
            out.append(i)
            b, j = self.parent[b]
            out.append(j)
        return out


def max_common_forest(
    n1: int, ends1: list[tuple[int, int]], n2: int, ends2: list[tuple[int, int]], target: int | None = None
) -> set[int]:
    """Largest set of ground elements independent in both graphic matroids.

    Element ``i`` is the edge ``ends1[i]`` in the first graph and ``ends2[i]`` in
    the second.  Stops early once ``target`` elements are found.
    """
    m = len(ends1)
    X: set[int] = set()
    # greedy start
    p1 = list(range(n1))
    p2 = list(range(n2))

    def find(p, x):
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    for i in range(m):
        a1, b1 = find(p1, ends1[i][0]), find(p1, ends1[i][1])
        a2, b2 = find(p2, ends2[i][0]), find(p2, ends2[i][1])
        if a1 != b1 and a2 != b2:
            p1[a1] = b1
            p2[a2] = b2
            X.add(i)
    while target is None or len(X) < target:
        f1 = _Forest(n1, ends1, X)
        f2 = _Forest(n2, ends2, X)
        sources, sinks = set(), set()
        out_edges: dict[int, list[int]] = {i: [] for i in range(m)}
        for x in range(m):
            if x in X:
                continue
            a, b = ends1[x]
            if a != b:
                pth = f1.path(a, b)
                if pth is None:
                    sources.add(x)
                else:
                    for y in pth:  # X - y + x independent in the first matroid
                        out_edges[y].append(x)
            a, b = ends2[x]
            if a != b:
                pth = f2.path(a, b)
                if pth is None:
                    sinks.add(x)
                else:
                    for y in pth:  # X - y + x independent in the second matroid
                        out_edges[x].append(y)
        if not sources or not sinks:
            break
        prev = {s: -1 for s in sources}
        queue = deque(sorted(sources))
        end = -1
        while queue:
            x = queue.popleft()
            if x in sinks:
                end = x
                break
            for y in out_edges[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if end < 0:
            break
        while end >= 0:
            X ^= {end}
            end = prev[end]
    return X


def dodgson_is_zero(g: Multigraph, spec: DodgsonSpec) -> bool:
    """True iff the two Dodgson minors have no common spanning tree."""
    p = dodgson_parts(g, spec)
    if not _is_forest(g, p.only_j + p.zeroed) or not _is_forest(g, p.only_i + p.zeroed):
        return True
    m1, m2 = dodgson_minors(g, spec)
    if m1.n_vertices != m2.n_vertices:
        return True
    if n_components(m1) != 1 or n_components(m2) != 1:
        return True
    target = m1.n_vertices - 1
    if target == 0:
        return False
    labels = m1.labels  # the same ground set in both minors
    vi1, vi2 = m1.vindex, m2.vindex
    e1, e2 = m1.edge_map, m2.edge_map
    ends1 = [(vi1[e1[e][0]], vi1[e1[e][1]]) for e in labels]
    ends2 = [(vi2[e2[e][0]], vi2[e2[e][1]]) for e in labels]
    return len(max_common_forest(m1.n_vertices, ends1, m2.n_vertices, ends2, target)) < target


def dodgson_is_zero_oracle(g: Multigraph, spec: DodgsonSpec) -> bool:
    """Exhaustive version of :func:`dodgson_is_zero` (enumerates trees)."""
    for _ in common_spanning_trees(g, spec):
        return False
    return True


# -- shortcuts ---------------------------------------------------------------------


def _two_cut_sides(g: Multigraph) -> list[tuple[frozenset[str], frozenset[str], frozenset[str]]]:
    """For each 2-vertex separator: (cut-joining edges, edges of a full component, the rest).

    One entry per full component.
    """
    out = []
    for cut in combinations(g.vertices, 2):
        rest = g.remove_vertices(cut)
        if rest.n_vertices < 2 or n_components(rest) < 2:
            continue
        cutset = set(cut)
        joining = frozenset(l for l, u, v in g.edges if u in cutset and v in cutset)
        for fc in full_components(g, cut):
            inside = frozenset(fc.component.labels) - joining
            outside = frozenset(g.labels) - inside - joining
            out.append((joining, inside, outside))
    return out


def _distribution_fires(sides, S: frozenset[str]) -> bool:
    for joining, inside, outside in sides:
        if S & joining:
            continue
        if len(S & inside) >= 2 and len(S & outside) >= 2:
            return True
    return False


@dataclass
class SplitContext:
    """Per-graph data reused across all configurations of that graph."""

    graph: Multigraph

    @cached_property
    def small_cuts(self) -> list[frozenset[str]]:
        """Inclusion-minimal edge cuts with at most three edges."""
        g = self.graph
        k = n_components(g)
        out: list[frozenset[str]] = []
        for size in (1, 2, 3):
            for A in combinations(g.labels, size):
                fa = frozenset(A)
                if any(c <= fa for c in out):
                    continue
                h = Multigraph._raw(g.vertices, [e for e in g.edges if e[0] not in fa])
                if n_components(h) > k:
                    out.append(fa)
        return out

    @cached_property
    def small_cycles(self) -> list[frozenset[str]]:
        """Cycles with at most three edges (loops, digons, triangles)."""
        g = self.graph
        out: list[frozenset[str]] = []
        for size in (1, 2, 3):
            for A in combinations(g.labels, size):
                fa = frozenset(A)
                if any(c <= fa for c in out):
                    continue
                if not _is_forest(g, A):
                    out.append(fa)
        return out

    @cached_property
    def two_cut_sides(self):
        return _two_cut_sides(self.graph)

    def minor_sides(self, e: str):
        cache = self.__dict__.setdefault("_minor_sides", {})
        if e not in cache:
            g = self.graph
            cache[e] = (_two_cut_sides(delete_edge(g, e)), _two_cut_sides(contract_edge(g, e)))
        return cache[e]

    def shortcut(self, S: Iterable[str]) -> str | None:
        S = frozenset(S)
        if any(c <= S for c in self.small_cuts):
            return "small-edge-cut-in-S"
        if any(c <= S for c in self.small_cycles):
            return "small-cycle-in-S"
        if _distribution_fires(self.two_cut_sides, S):
            return "two-cut-distribution"
        for e in sorted_tokens(S):
            rest = S - {e}
            for sides in self.minor_sides(e):
                if _distribution_fires(sides, rest):
                    return "three-cut-distribution"
        return None


def shortcut_predicates(g: Multigraph, S: Iterable[str], ctx: SplitContext | None = None) -> str | None:
    """Tag of a structural reason that ``S`` splits, or ``None``.

    * a cut of at most three edges lies inside ``S``;
    * a cycle of at most three edges lies inside ``S``;
    * a 2-vertex separator has a side holding at least two edges of ``S``
      with at least two more elements of ``S`` off that side;
    * the same, after deleting or contracting one element of ``S``.
    """
    S = frozenset(S)
    if len(S) != 5:
        raise GraphError("a configuration needs exactly 5 distinct edges")
    return (ctx or SplitContext(g)).shortcut(S)


# -- configurations ---------------------------------------------------------------


@dataclass(frozen=True)
class SplitReport:
    configuration: tuple[str, ...]
    splits: bool
    witness: DodgsonSpec | None = None
    shortcut: str | None = None

    @property
    def verdict(self) -> str:
        return "splits" if self.splits else "non-splitting"


def _check_config(g: Multigraph, S) -> tuple[str, ...]:
    S = tuple(sorted_tokens(set(S)))
    if len(S) != 5:
        raise GraphError("a configuration needs exactly 5 distinct edges")
    have = set(g.labels)
    for e in S:
        if e not in have:
            raise GraphError(f"no such edge {e!r}")
    return S


def first_zero_dodgson(g: Multigraph, S: Iterable[str]) -> DodgsonSpec | None:
    for spec in enumerate_dodgson_specs(S):
        if dodgson_is_zero(g, spec):
            return spec
    return None


def config_splits(g: Multigraph, S: Iterable[str], ctx: SplitContext | None = None) -> SplitReport:
    """Full report for one configuration, with the first vanishing Dodgson as witness."""
    S = _check_config(g, S)
    tag = (ctx or SplitContext(g)).shortcut(S)
    w = first_zero_dodgson(g, S)
    if tag is not None and w is None:
        raise AssertionError(f"shortcut {tag} fired on non-splitting configuration {S}")
    return SplitReport(S, w is not None, w, tag)


def _fast_splits(ctx: SplitContext, S: tuple[str, ...]) -> bool:
    if ctx.shortcut(S) is not None:
        return True
    return first_zero_dodgson(ctx.graph, S) is not None


def configurations(g: Multigraph) -> list[tuple[str, ...]]:
    return [tuple(c) for c in combinations(g.labels, 5)]


# Worker-side state for process pools: one context per graph per process.
_WORKER_CTX: dict[bytes, SplitContext] = {}


def _worker_nonsplit(args) -> list[tuple[str, ...]]:
    g, chunk, stop_early = args
    key = repr(g).encode()
    ctx = _WORKER_CTX.get(key)
    if ctx is None:
        ctx = _WORKER_CTX[key] = SplitContext(g)
    out = []
    for S in chunk:
        if not _fast_splits(ctx, S):
            out.append(S)
            if stop_early:
                break
    return out


def _chunks(seq: list, n: int) -> list[list]:
    size = max(1, -(-len(seq) // n))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _sweep(g: Multigraph, jobs: int, stop_early: bool) -> list[tuple[str, ...]]:
    configs = configurations(g)
    if jobs <= 1 or len(configs) < 64:
        return _worker_nonsplit((g, configs, stop_early))
    pieces = _chunks(configs, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_worker_nonsplit, [(g, c, stop_early) for c in pieces]))
    return sorted(S for r in results for S in r)


def nonsplitting_configs(g: Multigraph, jobs: int = 1) -> list[tuple[str, ...]]:
    """All non-splitting configurations, sorted."""
    return sorted(_sweep(g, jobs, False))


def graph_splits(g: Multigraph, jobs: int = 1) -> bool:
    """True iff every configuration splits (vacuously true below five edges)."""
    if g.n_edges < 5:
        return True
    return not _sweep(g, jobs, True)


def split_counts(g: Multigraph, jobs: int = 1) -> tuple[int, int, int]:
    """(non-splitting, splitting, total) configuration counts."""
    ns = len(nonsplitting_configs(g, jobs))
    total = len(configurations(g))
    return ns, total - ns, total


def configuration_orbits(g: Multigraph, configs: Iterable[Iterable[str]]) -> dict[bytes, list[tuple[str, ...]]]:
    """Group configurations by the automorphism orbit they belong to."""
    out: dict[bytes, list[tuple[str, ...]]] = {}
    for S in configs:
        S = tuple(S)
        key = canonical_form(g, edge_colors={e: 1 for e in S})
        out.setdefault(key, []).append(S)
    return out


# -- minimality ----------------------------------------------------------------------


@dataclass
class MinimalityReport:
    graph: Multigraph
    nonsplitting: list[tuple[str, ...]]
    deletion_splits: dict[str, bool] = field(default_factory=dict)
    contraction_splits: dict[str, bool] = field(default_factory=dict)
    conclusion: str = ""
    reducible_via: tuple[str, str] | None = None

    @property
    def minimal(self) -> bool:
        return self.reducible_via is None


def is_minor_minimal_nonsplitting(
    g: Multigraph, jobs: int = 1, cache: dict[bytes, bool] | None = None
) -> MinimalityReport:
    """Check that ``g`` does not split but every single-edge minor does.

    Isomorphic minors are decided once (keyed by canonical form); pass
    ``cache`` to share results across calls.
    """
    ns = nonsplitting_configs(g, jobs)
    if not ns:
        raise GraphError("graph splits; minimality undefined")
    cache = {} if cache is None else cache
    rep = MinimalityReport(g, ns)

    def splits(h: Multigraph) -> bool:
        key = canonical_form(h)
        if key not in cache:
            cache[key] = graph_splits(h, jobs)
        return cache[key]

    for e in g.labels:
        rep.deletion_splits[e] = splits(delete_edge(g, e))
        rep.contraction_splits[e] = splits(contract_edge(g, e))
    for e in g.labels:
        if not rep.deletion_splits[e]:
            rep.reducible_via = (e, "delete")
            break
        if not rep.contraction_splits[e]:
            rep.reducible_via = (e, "contract")
            break
    if rep.reducible_via is None:
        rep.conclusion = "minor-minimal"
    else:
        e, op = rep.reducible_via
        rep.conclusion = f"reducible-via {op} {e}"
    return rep


def default_jobs() -> int:
    return os.cpu_count() or 1
