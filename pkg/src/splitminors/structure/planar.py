"""Planarity, rotation systems and planar duals of multigraphs."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..multigraph import (
    GraphError,
    Multigraph,
    contract_edge,
    delete_edge,
    is_connected,
    n_components,
    sort_key,
)

Dart = tuple[str, int]  # (edge label, +1 leaving the smaller end / -1 leaving the larger end)


def dart_tail(g: Multigraph, d: Dart) -> str:
    u, v = g.ends(d[0])
    return u if d[1] > 0 else v


def dart_head(g: Multigraph, d: Dart) -> str:
    u, v = g.ends(d[0])
    return v if d[1] > 0 else u


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of darts leaving each vertex."""

    graph: Multigraph
    rotation: dict[str, tuple[Dart, ...]]

    def faces(self) -> list[list[Dart]]:
        """Boundary walks; each dart lies on exactly one face."""
        nxt = {}
        for v, darts in self.rotation.items():
            for i, d in enumerate(darts):
                nxt[(v, d)] = darts[(i + 1) % len(darts)]
        seen: set[Dart] = set()
        faces = []
        for v in self.graph.vertices:
            for d in self.rotation[v]:
                if d in seen:
                    continue
                face = []
                cur = d
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    rev = (cur[0], -cur[1])
                    cur = nxt[(dart_tail(self.graph, rev), rev)]
                faces.append(face)
        return faces

    def validate(self):
        g = self.graph
        want = {(l, s) for l, _, _ in g.edges for s in (1, -1)}
        got = [d for ds in self.rotation.values() for d in ds]
        if len(got) != len(want) or set(got) != want:
            raise GraphError("rotation system does not list every dart once")
        for v, ds in self.rotation.items():
            for d in ds:
                if dart_tail(g, d) != v:
                    raise GraphError(f"dart {d} listed at the wrong vertex {v}")
        f = len(self.faces())
        k = n_components(g)
        isolated = sum(1 for v in g.vertices if not self.rotation[v])
        # traced separately, each component with an edge has V - E + F = 2
        if g.n_vertices - g.n_edges + f != 2 * (k - isolated) + isolated:
            raise GraphError("rotation system fails the Euler check")
        return self


def is_planar(g: Multigraph) -> RotationSystem | None:
    """A planar rotation system for ``g`` or ``None`` if ``g`` is not planar."""
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    for _, u, v in g.edges:
        if u != v:
            simple.add_edge(u, v)
    ok, emb = nx.check_planarity(simple)
    if not ok:
        return None
    rot: dict[str, list[Dart]] = {}
    for v in g.vertices:
        out: list[Dart] = []
        for w in (emb.neighbors_cw_order(v) if v in emb else []):
            labels = g.edges_between(v, w)
            # parallel edges fan out in label order at the smaller end, reversed at the other
            if sort_key(v) < sort_key(w):
                out.extend((l, 1) for l in labels)
            else:
                out.extend((l, -1) for l in reversed(labels))
        for l in g.edges_between(v, v):
            out[:0] = [(l, 1), (l, -1)]
        rot[v] = out
    return RotationSystem(g, {v: tuple(ds) for v, ds in rot.items()}).validate()


def planar_dual(g: Multigraph, rs: RotationSystem | None = None) -> Multigraph:
    """Dual graph with one vertex per face and edge ``e`` crossing edge ``e``."""
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if rs is None:
        rs = is_planar(g)
        if rs is None:
            raise GraphError("graph is not planar")
    elif rs.graph != g:
        raise GraphError("rotation system belongs to a different graph")
    else:
        rs.validate()
    faces = rs.faces()
    face_of = {}
    for i, f in enumerate(faces):
        for d in f:
            face_of[d] = f"f{i + 1}"
    edges = [(l, face_of[(l, 1)], face_of[(l, -1)]) for l in g.labels]
    return Multigraph.from_edges(edges, vertices=[f"f{i + 1}" for i in range(len(faces))])


def rotation_delete(rs: RotationSystem, e: str) -> RotationSystem:
    h = delete_edge(rs.graph, e)
    rot = {v: tuple(d for d in ds if d[0] != e) for v, ds in rs.rotation.items()}
    return RotationSystem(h, rot)


def rotation_contract(rs: RotationSystem, e: str) -> RotationSystem:
    """Rotation induced on ``g / e``: splice the far end's darts in place of ``e``."""
    g = rs.graph
    u, v = g.ends(e)
    if u == v:
        return rotation_delete(rs, e)
    h = contract_edge(g, e)
    at_u = list(rs.rotation[u])
    at_v = list(rs.rotation[v])
    i = at_u.index((e, 1))
    j = at_v.index((e, -1))
    spliced = at_v[j + 1 :] + at_v[:j]
    merged = at_u[:i] + spliced + at_u[i + 1 :]

    # darts of edges whose ends were renamed may flip their orientation sign
    def fix(d: Dart) -> Dart:
        l, s = d
        a, b = g.ends(l)
        tail = a if s > 0 else b
        tail = u if tail == v else tail
        a2, b2 = h.ends(l)
        if a2 == b2:
            return d
        return (l, 1 if tail == a2 else -1)

    rot = {}
    for w, ds in rs.rotation.items():
        if w == v:
            continue
        src = merged if w == u else ds
        rot[w] = tuple(fix(d) for d in src if d[0] != e)
    return RotationSystem(h, rot)
