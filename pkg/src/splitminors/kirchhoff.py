"""Kirchhoff and Dodgson polynomials with a fixed sign convention.

Every signed quantity here is taken relative to one :class:`IncidenceFixture`
per graph: vertices in sorted order, each non-loop edge oriented from its
smaller to its larger endpoint, and the column of the last vertex removed from
the signed incidence matrix.  The graph matrix is

    M = [[diag(alpha), X], [-X^T, 0]]

with ``X`` the reduced incidence matrix (rows indexed by edges in label order).
The Dodgson polynomial for ``(I, J, K)`` is the determinant of ``M`` with the
rows of ``I`` and the columns of ``J`` removed and ``alpha_e = 0`` for ``e`` in
``K``.

Two routes compute Dodgsons:

* :func:`dodgson` sums over common spanning trees of two minors; each term is a
  product of two small integer determinants of rows of ``X``.
* :func:`dodgson_matrix_oracle` expands the matrix determinant directly and is
  kept for testing on small graphs.

They agree up to the global sign :func:`epsilon`, which depends only on where
the index sets sit in the edge order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .multigraph import (
    GraphError,
    Multigraph,
    _components_idx,
    is_connected,
    sort_key,
    sorted_tokens,
    spanning_trees,
    take_minor,
)
from .polynomial import (
    ONE,
    NotQuadraticError,
    Polynomial,
    ZERO,
    coefficient_slices,
    degree_in,
    mono_from,
    perfect_square_root,
)

ORACLE_MAX_EDGES = 12


class OracleScaleError(RuntimeError):
    """Input too large for a test-only oracle."""


# -- fixture -------------------------------------------------------------------


@dataclass(frozen=True)
class IncidenceFixture:
    graph: Multigraph

    @property
    def vertex_order(self) -> tuple[str, ...]:
        return self.graph.vertices

    @property
    def edge_order(self) -> tuple[str, ...]:
        return self.graph.labels

    @property
    def deleted_vertex(self) -> str | None:
        return self.graph.vertices[-1] if self.graph.vertices else None

    @cached_property
    def rows(self) -> dict[str, tuple[int, ...]]:
        """Reduced signed incidence rows, one per edge."""
        n = self.graph.n_vertices
        vi = self.graph.vindex
        out = {}
        for label, u, v in self.graph.edges:
            row = [0] * n
            if u != v:
                row[vi[u]] = 1
                row[vi[v]] = -1
            out[label] = tuple(row[: n - 1])
        return out

    def matrix(self) -> list[list[int]]:
        return [list(self.rows[e]) for e in self.edge_order]

    def describe(self) -> str:
        return (
            "vertex-order: " + " ".join(self.vertex_order) + "\n"
            "edge-order: " + " ".join(self.edge_order) + "\n"
            f"deleted-vertex: {self.deleted_vertex}\n"
            "orientation: smaller endpoint -> larger endpoint"
        )


def fixture(g: Multigraph) -> IncidenceFixture:
    return IncidenceFixture(g)


# -- specs -----------------------------------------------------------------------


def _sorted_tuple(xs: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted_tokens(set(xs)))


@dataclass(frozen=True)
class DodgsonSpec:
    I: tuple[str, ...]
    J: tuple[str, ...]
    K: tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("I", "J", "K"):
            object.__setattr__(self, name, _sorted_tuple(getattr(self, name)))
        if len(self.I) != len(self.J):
            raise GraphError("Dodgson index sets I and J must have equal size")

    @classmethod
    def of(cls, I: Iterable[str] = (), J: Iterable[str] = (), K: Iterable[str] = ()) -> "DodgsonSpec":
        return cls(tuple(I), tuple(J), tuple(K))

    def swapped(self) -> "DodgsonSpec":
        return DodgsonSpec(self.J, self.I, self.K)

    def edges(self) -> set[str]:
        return set(self.I) | set(self.J) | set(self.K)

    def __str__(self):
        s = f"Psi^{{{','.join(self.I)};{','.join(self.J)}}}"
        return s + (f"_{{{','.join(self.K)}}}" if self.K else "")


def _check_spec(g: Multigraph, spec: DodgsonSpec):
    have = set(g.labels)
    bad = sorted_tokens(spec.edges() - have)
    if bad:
        raise GraphError(f"no such edge {bad[0]!r}")


def enumerate_dodgson_specs(S: Iterable[str]) -> list[DodgsonSpec]:
    """The thirty Dodgsons attached to a five-edge configuration.

    Fifteen of shape ``(ab, cd; e)`` followed by fifteen of shape
    ``(abe, cde)``; for each choice of ``e`` the other four edges are paired
    three ways, with ``I`` always holding the smallest of the four.
    """
    S = sorted_tokens(set(S))
    if len(S) != 5:
        raise GraphError("a configuration needs exactly 5 distinct edges")
    pairings = []
    for e in S:
        a, b, c, d = [x for x in S if x != e]
        pairings.append((e, [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]))
    out = [DodgsonSpec(p, q, (e,)) for e, ps in pairings for p, q in ps]
    out += [DodgsonSpec(p + (e,), q + (e,), ()) for e, ps in pairings for p, q in ps]
    return out


# -- Kirchhoff polynomial --------------------------------------------------------


def _complement_monomial(labels: Sequence[str], tree: Iterable[str]):
    t = set(tree)
    return mono_from(e for e in labels if e not in t)


def kirchhoff_poly(g: Multigraph) -> Polynomial:
    """Sum over spanning trees of the product of variables of non-tree edges."""
    if g.n_vertices == 0:
        return Polynomial.const(1)
    terms = {}
    for t in spanning_trees(g):
        terms[_complement_monomial(g.labels, t)] = 1
    return Polynomial(terms)


# -- integer determinants ----------------------------------------------------------


def int_det(mat: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rows_det(fx: IncidenceFixture, rows: Sequence[str]) -> int:
    return int_det([list(fx.rows[e]) for e in rows])


# -- Dodgson polynomials -------------------------------------------------------------


def _is_forest(g: Multigraph, edges: Iterable[str]) -> bool:
    n = g.n_vertices
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    vi = g.vindex
    for e in edges:
        u, v = g.ends(e)
        a, b = find(vi[u]), find(vi[v])
        if a == b:
            return False
        parent[a] = b
    return True


@dataclass(frozen=True)
class DodgsonParts:
    """Index sets of a Dodgson after removing redundancies."""

    only_i: tuple[str, ...]
    only_j: tuple[str, ...]
    both: tuple[str, ...]
    zeroed: tuple[str, ...]
    rest: tuple[str, ...]  # edges outside I and J, in edge order (zeroed included)


def dodgson_parts(g: Multigraph, spec: DodgsonSpec) -> DodgsonParts:
    _check_spec(g, spec)
    I, J = set(spec.I), set(spec.J)
    K = set(spec.K) - I - J  # zeroing a removed row or column changes nothing
    order = g.labels
    return DodgsonParts(
        tuple(e for e in order if e in I and e not in J),
        tuple(e for e in order if e in J and e not in I),
        tuple(e for e in order if e in I and e in J),
        tuple(e for e in order if e in K),
        tuple(e for e in order if e not in I and e not in J),
    )


def dodgson_minors(g: Multigraph, spec: DodgsonSpec) -> tuple[Multigraph, Multigraph]:
    """The two minors whose common spanning trees index the Dodgson's terms."""
    p = dodgson_parts(g, spec)
    m1 = take_minor(g, delete=spec.I, contract=set(p.only_j) | set(p.zeroed))
    m2 = take_minor(g, delete=spec.J, contract=set(p.only_i) | set(p.zeroed))
    return m1, m2


def common_spanning_trees(g: Multigraph, spec: DodgsonSpec):
    """Yield edge sets that are spanning trees of both Dodgson minors.

    Returns nothing when a contracted set already contains a cycle, since the
    Dodgson is then zero.
    """
    p = dodgson_parts(g, spec)
    if not _is_forest(g, p.only_j + p.zeroed) or not _is_forest(g, p.only_i + p.zeroed):
        return
    m1, m2 = dodgson_minors(g, spec)
    if m1.n_vertices != m2.n_vertices or not is_connected(m2):
        return
    vi2 = m2.vindex
    ends2 = m2.edge_map
    n2 = m2.n_vertices
    for t in spanning_trees(m1):
        if _components_count(n2, [(vi2[ends2[e][0]], vi2[ends2[e][1]]) for e in t]) == 1:
            yield t


def _components_count(n: int, edges) -> int:
    return len(set(_components_idx(n, edges)))


def epsilon(g: Multigraph, spec: DodgsonSpec) -> int:
    """Global sign relating :func:`dodgson` to the matrix determinant.

    Moving the rows of ``J \\ I`` (resp. columns of ``I \\ J``) past the
    remaining edge rows costs one transposition per out-of-order pair.
    """
    p = dodgson_parts(g, spec)
    pos = g.eindex
    inv = 0
    for r in p.rest:
        inv += sum(1 for j in p.only_j if pos[j] < pos[r])
        inv += sum(1 for i in p.only_i if pos[i] < pos[r])
    return -1 if inv % 2 else 1


def dodgson(g: Multigraph, spec: DodgsonSpec, fx: IncidenceFixture | None = None) -> Polynomial:
    """Tree-method Dodgson.

    Each common spanning tree ``T`` contributes the monomial of the edges
    outside ``T``, ``I``, ``J`` and ``K`` with sign
    ``det X[T+K+J\\I] * det X[T+K+I\\J]`` (rows in edge order inside each block).
    Multiply by :func:`epsilon` to get the matrix-determinant sign.
    """
    fx = fx or IncidenceFixture(g)
    p = dodgson_parts(g, spec)
    pos = g.eindex
    terms = {}
    for t in common_spanning_trees(g, spec):
        u = sorted(set(t) | set(p.zeroed), key=pos.__getitem__)
        s = _rows_det(fx, u + list(p.only_j)) * _rows_det(fx, u + list(p.only_i))
        if s == 0:
            raise ArithmeticError("common spanning tree with singular incidence rows")
        used = set(u)
        terms[mono_from(e for e in p.rest if e not in used)] = s
    return Polynomial(terms)


def dodgson_signed(g: Multigraph, spec: DodgsonSpec, fx: IncidenceFixture | None = None) -> Polynomial:
    """Dodgson with the sign of the matrix determinant, computed by trees."""
    d = dodgson(g, spec, fx)
    return -d if epsilon(g, spec) < 0 else d


# -- matrix oracle --------------------------------------------------------------------


def _graph_matrix(fx: IncidenceFixture, alpha: dict[str, int], spec: DodgsonSpec) -> list[list[int]]:
    g = fx.graph
    order = g.labels
    nv = g.n_vertices - 1 if g.n_vertices else 0
    I, J, K = set(spec.I), set(spec.J), set(spec.K)
    full = []
    for e in order:
        row = [alpha.get(e, 0) if (f == e and e not in K) else 0 for f in order]
        full.append(row + list(fx.rows[e]))
    for c in range(nv):
        full.append([-fx.rows[e][c] for e in order] + [0] * nv)
    keep_r = [i for i, e in enumerate(order) if e not in I] + [len(order) + c for c in range(nv)]
    keep_c = [i for i, e in enumerate(order) if e not in J] + [len(order) + c for c in range(nv)]
    return [[full[r][c] for c in keep_c] for r in keep_r]


def dodgson_matrix_oracle(g: Multigraph, spec: DodgsonSpec, fx: IncidenceFixture | None = None) -> Polynomial:
    """Determinant of the reduced graph matrix, expanded exactly.

    Every variable sits in a single matrix entry, so the determinant is affine
    in each variable.  Coefficients are recovered from integer determinants at
    all 0/1 points by Moebius inversion over the subset lattice.
    """
    _check_spec(g, spec)
    if g.n_edges > ORACLE_MAX_EDGES:
        raise OracleScaleError(f"oracle scale only (|E| = {g.n_edges} > {ORACLE_MAX_EDGES})")
    fx = fx or IncidenceFixture(g)
    removed = set(spec.I) | set(spec.J) | set(spec.K)
    vars_ = [e for e in g.labels if e not in removed]
    k = len(vars_)
    values = [0] * (1 << k)
    for mask in range(1 << k):
        alpha = {vars_[i]: 1 for i in range(k) if mask >> i & 1}
        values[mask] = int_det(_graph_matrix(fx, alpha, spec))
    # in-place Moebius transform: values[mask] becomes the coefficient of mask
    for i in range(k):
        bit = 1 << i
        for mask in range(1 << k):
            if mask & bit:
                values[mask] -= values[mask ^ bit]
    terms = {}
    for mask, c in enumerate(values):
        if c:
            terms[mono_from(vars_[i] for i in range(k) if mask >> i & 1)] = c
    return Polynomial(terms)


def kirchhoff_det_oracle(g: Multigraph) -> Polynomial:
    """Kirchhoff polynomial as the determinant of the graph matrix."""
    return dodgson_matrix_oracle(g, DodgsonSpec((), (), ()))


# -- five-invariant -------------------------------------------------------------------


def five_invariant_dodgsons(edges: Sequence[str]) -> list[DodgsonSpec]:
    e1, e2, e3, e4, e5 = edges
    return [
        DodgsonSpec((e1, e2), (e3, e4), (e5,)),
        DodgsonSpec((e1, e3, e5), (e2, e4, e5), ()),
        DodgsonSpec((e1, e3), (e2, e4), (e5,)),
        DodgsonSpec((e1, e2, e5), (e3, e4, e5), ()),
    ]


def five_invariant_raw(g: Multigraph, edges: Sequence[str], fx: IncidenceFixture | None = None) -> Polynomial:
    """``D1*D2 - D3*D4`` with matrix signs, before sign normalisation."""
    edges = list(edges)
    if len(edges) != 5 or len(set(edges)) != 5:
        raise GraphError("five-invariant needs 5 distinct edges")
    fx = fx or IncidenceFixture(g)
    d1, d2, d3, d4 = (dodgson_signed(g, s, fx) for s in five_invariant_dodgsons(edges))
    return d1 * d2 - d3 * d4


def five_invariant(g: Multigraph, edges: Sequence[str], fx: IncidenceFixture | None = None) -> Polynomial:
    """Five-invariant of an ordered configuration, leading term made positive."""
    return five_invariant_raw(g, edges, fx).normalized()


# -- denominator reduction -------------------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    index: int  # n such that ``poly`` is P_n
    variable: str | None  # variable eliminated to produce ``poly`` (None for P5)
    poly: Polynomial
    note: str = ""


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    status: str = ""

    @property
    def last(self) -> Polynomial:
        return self.steps[-1].poly


def reduction_step(p: Polynomial, v: str) -> Polynomial | None:
    """``sqrt(B^2 - 4AC)`` for ``p = A v^2 + B v + C``; ``None`` if not a square.

    Raises :class:`NotQuadraticError` when ``p`` has degree > 2 in ``v``.
    """
    a, b, c = coefficient_slices(p, v)
    return perfect_square_root(b * b - 4 * a * c)


def denominator_reduce(g: Multigraph, order: Sequence[str]) -> ReductionTrace:
    """Run denominator reduction starting from the five-invariant of ``order[:5]``.

    Statuses: ``reduced to zero``, ``reduced to constant``,
    ``non-square discriminant at step n``, ``not quadratic at step n`` or
    ``completed``.  A variable that does not occur is skipped and noted.
    """
    order = list(order)
    if g.n_edges < 6:
        raise GraphError("denominator reduction needs at least 6 edges")
    if sorted_tokens(order) != sorted_tokens(g.labels) or len(set(order)) != len(order):
        raise GraphError("edge order must list every edge exactly once")
    trace = ReductionTrace()
    p = five_invariant(g, order[:5])
    n = 5
    trace.steps.append(ReductionStep(n, None, p))
    for v in order[5:]:
        if p.is_zero():
            trace.status = "reduced to zero"
            return trace
        if not p.variables():
            trace.status = "reduced to constant"
            return trace
        if degree_in(p, v) == 0:
            trace.steps.append(ReductionStep(n, v, p, f"variable-absent at step {n}"))
            continue
        try:
            r = reduction_step(p, v)
        except NotQuadraticError:
            trace.status = f"not quadratic at step {n}"
            return trace
        if r is None:
            trace.status = f"non-square discriminant at step {n}"
            return trace
        n += 1
        p = r
        trace.steps.append(ReductionStep(n, v, p))
    if p.is_zero():
        trace.status = "reduced to zero"
    elif not p.variables():
        trace.status = "reduced to constant"
    else:
        trace.status = "completed"
    return trace
