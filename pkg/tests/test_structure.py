import itertools
import random

import pytest

from splitminors.canonical import canonical_form, is_isomorphic
from splitminors.multigraph import (
    GraphError,
    Multigraph,
    contract_edge,
    delete_edge,
    is_connected,
    vertex_connectivity,
)
from splitminors.splitting import config_splits, graph_splits, nonsplitting_configs
from splitminors.structure import (
    FamilyCapError,
    delta_to_y,
    delta_y_family,
    forbidden_minor_scan,
    has_minor,
    has_well_connected_s2,
    is_planar,
    neighbours,
    ordering_is_valid,
    planar_dual,
    primitive_divergent,
    star_sites,
    three_cut_edge_ordering,
    triangle_sites,
    y_to_delta,
)
from splitminors.structure import builtin
from splitminors.structure.builtins import complete, from_pairs
from splitminors.structure.planar import rotation_contract, rotation_delete


def test_builtin_shapes():
    o = builtin("O")
    assert (o.n_vertices, o.n_edges) == (6, 12)
    assert is_isomorphic(builtin("zigzag(0)"), builtin("K4"))
    for n in range(5):
        z = builtin("zigzag", n)
        assert z.n_edges == 2 * n + 6
        degs = sorted(z.degrees.values())
        assert degs.count(4) == n and degs.count(3) == 4
    assert builtin("sq_odd_cycle(3)").n_edges == 14
    with pytest.raises(GraphError, match="unknown builtin"):
        builtin("K7")
    with pytest.raises(GraphError):
        builtin("zigzag")


def test_sites():
    k4 = builtin("K4")
    assert len(triangle_sites(k4)) == 4
    assert len(star_sites(k4)) == 4
    # a doubled edge stops the triangle and star from being sites
    g = from_pairs([(1, 2), (1, 2), (1, 3), (2, 3), (3, 4)])
    assert triangle_sites(g) == []
    assert all(s.vertices[0] != "v1" for s in star_sites(g))


def test_delta_y_round_trip_k4():
    k4 = builtin("K4")
    for site in triangle_sites(k4):
        y = delta_to_y(k4, site.edges)
        assert (y.n_vertices, y.n_edges) == (5, 6)
        centre = next(v for v in y.vertices if v not in k4.vertices)
        assert is_isomorphic(y_to_delta(y, centre), k4)
        # labels outside the site survive
        assert set(k4.labels) - set(site.edges) <= set(y.labels)


def test_delta_y_invalid_sites():
    k4 = builtin("K4")
    with pytest.raises(GraphError):
        delta_to_y(k4, ["e1", "e2", "e6"])
    with pytest.raises(GraphError):
        y_to_delta(builtin("O"), "v1")


def test_octahedron_to_h_to_cube():
    o, h, c = builtin("O"), builtin("H"), builtin("C")
    assert any(is_isomorphic(n, h) for n in neighbours(o))
    assert any(is_isomorphic(n, c) for n in neighbours(h))


def test_octahedron_family():
    fam = delta_y_family(builtin("O"))
    assert len(fam) == 15
    keys = set(fam)
    for name in ("O", "H", "C", "Q"):
        assert canonical_form(builtin(name)) in keys
    assert {g.n_edges for g in fam.values()} == {12}


@pytest.mark.parametrize("name", ["K33", "K5", "prism2dual"])
def test_family_edge_count_constant(name):
    fam = delta_y_family(builtin(name), cap=1000)
    assert {g.n_edges for g in fam.values()} == {builtin(name).n_edges}


def test_family_cap():
    with pytest.raises(FamilyCapError) as exc:
        delta_y_family(builtin("K5"), cap=10)
    assert len(exc.value.partial) > 10


def test_planarity():
    assert is_planar(builtin("K5")) is None
    assert is_planar(builtin("K33")) is None
    for name in ("O", "C", "H", "K4", "zigzag(3)", "prism2"):
        assert is_planar(builtin(name)) is not None
    with pytest.raises(GraphError):
        planar_dual(builtin("K5"))


def test_duals():
    o, c = builtin("O"), builtin("C")
    assert is_isomorphic(planar_dual(o), c)
    assert is_isomorphic(planar_dual(planar_dual(c)), c)
    assert is_isomorphic(planar_dual(builtin("K4")), builtin("K4"))
    assert is_isomorphic(planar_dual(builtin("prism2")), builtin("prism2dual"))


def test_dual_keeps_edge_labels():
    c = builtin("C")
    assert planar_dual(c).labels == c.labels


@pytest.mark.parametrize("name", ["O", "C", "H", "K4", "zigzag(2)"])
def test_delete_contract_duality(name):
    g = builtin(name)
    rs = is_planar(g)
    d = planar_dual(g, rs)
    for e in g.labels:
        assert is_isomorphic(planar_dual(delete_edge(g, e), rotation_delete(rs, e)), contract_edge(d, e))
        assert is_isomorphic(planar_dual(contract_edge(g, e), rotation_contract(rs, e)), delete_edge(d, e))


@pytest.mark.parametrize("name", ["O", "H", "K4", "zigzag(1)", "prism2"])
def test_dual_preserves_nonsplitting_count(name):
    g = builtin(name)
    assert len(nonsplitting_configs(g)) == len(nonsplitting_configs(planar_dual(g)))


def test_has_minor_examples():
    o = builtin("O")
    assert has_minor(o, o)
    assert has_minor(builtin("K5"), builtin("K4"))
    assert not has_minor(builtin("K4"), builtin("K5"))
    assert not has_minor(builtin("sq_odd_cycle(3)"), o)
    ok, cert = has_minor(complete(6), o, certificate=True)
    assert ok and cert.verify(complete(6), o)
    assert has_minor(builtin("C"), builtin("K4"))


def test_forbidden_scan():
    assert forbidden_minor_scan(builtin("K5")) == {"K5"}
    assert "O" in forbidden_minor_scan(builtin("O"))
    assert forbidden_minor_scan(builtin("K4")) == set()
    for n in range(3):
        assert forbidden_minor_scan(builtin("zigzag", n)) == set()


def _s2_host():
    # roots r1 r2 r3; one side realises the rooted gadget, the other is one vertex
    return Multigraph.from_edges(
        [
            ("e1", "r1", "a"), ("e2", "r1", "b"), ("e3", "r2", "a"), ("e4", "r2", "w"),
            ("e5", "r3", "b"), ("e6", "r3", "w"), ("e7", "a", "w"), ("e8", "w", "b"),
            ("e9", "x", "r1"), ("e10", "x", "r2"), ("e11", "x", "r3"),
        ]
    )


def test_well_connected_s2():
    assert has_well_connected_s2(_s2_host(), ("r1", "r2", "r3"))
    # without the w-b edge {r1, w} no longer has the required shape
    broken = Multigraph.from_edges([e for e in _s2_host().edges if e[0] != "e8"])
    assert not has_well_connected_s2(broken, ("r1", "r2", "r3"))
    with pytest.raises(GraphError):
        has_well_connected_s2(builtin("K4"), ("v1", "v2", "v3"))


def test_zigzag_cuts_have_no_well_connected_s2():
    for n in range(1, 4):
        z = builtin("zigzag", n)
        for cut in itertools.combinations(z.vertices, 3):
            rest = z.remove_vertices(cut)
            if rest.n_vertices and not is_connected(rest):
                assert not has_well_connected_s2(z, cut)


def test_primitive_divergence():
    for n in range(5):
        assert primitive_divergent(builtin("zigzag", n)).primitive
    doubled = from_pairs([(1, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 4)])
    rep = primitive_divergent(doubled)
    assert not rep.primitive
    # degree two vertex with |E| = 2h
    g = from_pairs([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (5, 4), (3, 4)])
    assert g.n_edges == 8 and not primitive_divergent(g).primitive
    assert not primitive_divergent(builtin("K5")).primitive


def test_parallel_edge_certificate():
    # K4 with the edge v3v4 moved onto v1v2, so |E| = 2h still holds
    g = from_pairs([(1, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    assert g.n_edges == 6
    rep = primitive_divergent(g)
    assert not rep.primitive
    assert sorted(rep.subgraph) == ["e1", "e2"]


def test_orderings():
    res = three_cut_edge_ordering(builtin("zigzag(2)"))
    assert res.order is not None and ordering_is_valid(builtin("zigzag(2)"), res.order)
    res = three_cut_edge_ordering(builtin("K4"))
    assert res.order is not None and ordering_is_valid(builtin("K4"), res.order)
    with pytest.raises(GraphError, match="precondition"):
        three_cut_edge_ordering(builtin("O"))
    with pytest.raises(GraphError, match="precondition"):
        three_cut_edge_ordering(builtin("prism2"))
    assert not ordering_is_valid(builtin("K4"), ["e1"])


@pytest.mark.parametrize("n", [1, 3])
def test_zigzag_orderings(n):
    z = builtin("zigzag", n)
    res = three_cut_edge_ordering(z)
    assert ordering_is_valid(z, res.order)


def _site_disjoint_samples(g: Multigraph, rng: random.Random, k: int):
    out = []
    for site in triangle_sites(g):
        h = delta_to_y(g, site.edges)
        free = [e for e in g.labels if e not in site.edges]
        for _ in range(k):
            if len(free) >= 5:
                out.append((g, h, tuple(rng.sample(free, 5))))
    return out


def test_delta_y_splitting_transfer():
    rng = random.Random(41)
    samples = []
    for name in ("O", "K5", "H", "zigzag(2)"):
        samples += _site_disjoint_samples(builtin(name), rng, 3)
    rng.shuffle(samples)
    assert len(samples) >= 50
    for g, h, S in samples[:50]:
        assert config_splits(g, S).splits == config_splits(h, S).splits


def test_four_connected_dichotomy():
    corpus = [builtin(n) for n in ("O", "K5", "C", "H", "K33")]
    corpus += [builtin("sq_odd_cycle", k) for k in (2, 3)]
    corpus += [complete(6)]
    for g in corpus:
        if vertex_connectivity(g) < 4:
            continue
        is_square = any(is_isomorphic(g, builtin("sq_odd_cycle", k)) for k in range(2, 5))
        assert is_square or has_minor(g, builtin("O"))


def test_main_theorem_sample():
    rng = random.Random(8)
    checked = 0
    for _ in range(40):
        n = rng.randint(5, 7)
        all_pairs = list(itertools.combinations(range(1, n + 1), 2))
        pairs = rng.sample(all_pairs, min(len(all_pairs), rng.randint(2 * n - 1, 2 * n + 2)))
        g = from_pairs(pairs, n)
        if not is_connected(g) or vertex_connectivity(g) < 3:
            continue
        checked += 1
        assert graph_splits(g) == (forbidden_minor_scan(g) == set())
    assert checked >= 3
