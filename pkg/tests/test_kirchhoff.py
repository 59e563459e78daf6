import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import multigraphs
from splitminors.kirchhoff import (
    ORACLE_MAX_EDGES,
    DodgsonSpec,
    IncidenceFixture,
    OracleScaleError,
    denominator_reduce,
    dodgson,
    dodgson_matrix_oracle,
    dodgson_signed,
    enumerate_dodgson_specs,
    epsilon,
    five_invariant,
    five_invariant_raw,
    kirchhoff_det_oracle,
    kirchhoff_poly,
    reduction_step,
)
from splitminors.multigraph import GraphError, contract_edge, delete_edge
from splitminors.polynomial import Polynomial, mono_degree, monomial_content, parse, to_str
from splitminors.splitting import first_zero_dodgson, nonsplitting_configs
from splitminors.structure import builtin
from splitminors.structure.builtins import from_pairs

C4CHORD_PSI = (
    "e2*e4 + e2*e3 + e1*e4 + e1*e3 + e4*e5 + e3*e5 + e2*e5 + e1*e5"
)


def test_fixture_is_deterministic():
    g = builtin("C4chord")
    fx = IncidenceFixture(g)
    assert fx.vertex_order == ("v1", "v2", "v3", "v4")
    assert fx.deleted_vertex == "v4"
    assert fx.rows["e1"] == (1, -1, 0)  # v1 -> v2
    assert fx.rows["e4"] == (0, 0, 1)  # v3 -> v4, v4 column removed
    assert IncidenceFixture(builtin("C4chord")).matrix() == fx.matrix()
    assert "deleted-vertex: v4" in fx.describe()


def test_loop_rows_are_zero():
    fx = IncidenceFixture(from_pairs([(1, 2), (2, 2)]))
    assert fx.rows["e2"] == (0,)


def test_kirchhoff_c4chord_golden():
    psi = kirchhoff_poly(builtin("C4chord"))
    assert psi == parse(C4CHORD_PSI)
    assert to_str(psi) == "e1*e3 + e1*e4 + e1*e5 + e2*e3 + e2*e4 + e2*e5 + e3*e5 + e4*e5"


def test_kirchhoff_trivial_cases():
    assert kirchhoff_poly(from_pairs([(1, 2), (2, 3), (2, 4)])) == Polynomial.const(1)
    assert kirchhoff_poly(from_pairs([(1, 2), (3, 4)])).is_zero()


def test_det_oracle_examples():
    assert kirchhoff_det_oracle(from_pairs([(1, 2)])) == Polynomial.const(1)
    tri = from_pairs([(1, 2), (1, 3), (2, 3)])
    assert kirchhoff_det_oracle(tri) == parse("e1 + e2 + e3")
    g = builtin("C4chord")
    assert kirchhoff_det_oracle(g) == kirchhoff_poly(g)


def test_oracle_scale_cap():
    g = builtin("K5")
    big = from_pairs([(1, 2)] * (ORACLE_MAX_EDGES + 1))
    with pytest.raises(OracleScaleError, match="oracle scale only"):
        kirchhoff_det_oracle(big)
    assert kirchhoff_det_oracle(g) == kirchhoff_poly(g)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=5, max_edges=7))
def test_kirchhoff_equals_determinant(g):
    assert kirchhoff_poly(g) == kirchhoff_det_oracle(g)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=5, max_edges=9))
def test_deletion_contraction(g):
    psi = kirchhoff_poly(g)
    for l, u, v in g.edges:
        if u == v:
            assert psi == Polynomial.var(l) * kirchhoff_poly(delete_edge(g, l))
        else:
            assert psi == Polynomial.var(l) * kirchhoff_poly(delete_edge(g, l)) + kirchhoff_poly(contract_edge(g, l))


def test_dodgson_example_c4chord():
    g = builtin("C4chord")
    d = dodgson_signed(g, DodgsonSpec.of(["e5"], ["e4"]))
    assert set(d.variables()) == {"e1", "e2"}
    assert sorted(abs(c) for c in d.coefficients()) == [1, 1]
    assert d == dodgson_matrix_oracle(g, DodgsonSpec.of(["e5"], ["e4"]))


def test_empty_spec_is_kirchhoff():
    g = builtin("K4")
    assert dodgson(g, DodgsonSpec.of()) == kirchhoff_poly(g)
    assert dodgson_matrix_oracle(g, DodgsonSpec.of()) == kirchhoff_det_oracle(g)


def test_disconnected_minor_gives_zero():
    g = builtin("C4chord")
    # deleting the cut {e1, e2} isolates v1 in the first minor
    assert dodgson(g, DodgsonSpec.of(["e1", "e2", "e3"], ["e3", "e4", "e5"])).is_zero()
    assert dodgson_matrix_oracle(g, DodgsonSpec.of(["e1", "e2", "e3"], ["e3", "e4", "e5"])).is_zero()


def test_shared_index_is_a_deletion():
    g = builtin("K4")
    for e in g.labels:
        rest = [x for x in g.labels if x != e]
        spec = DodgsonSpec.of([e, rest[0]], [e, rest[1]], [rest[2]])
        small = DodgsonSpec.of([rest[0]], [rest[1]], [rest[2]])
        a = dodgson_matrix_oracle(g, spec)
        b = dodgson_matrix_oracle(delete_edge(g, e), small)
        assert a == b or a == -b


def test_spec_validation():
    with pytest.raises(GraphError):
        DodgsonSpec.of(["e1"], [])
    with pytest.raises(GraphError, match="no such edge"):
        dodgson(builtin("K4"), DodgsonSpec.of(["e1"], ["e99"]))


def test_thirty_dodgsons():
    S = ["e1", "e2", "e3", "e4", "e5"]
    specs = enumerate_dodgson_specs(S)
    assert len(specs) == 30 and len(set(specs)) == 30
    assert sum(len(s.I) == 2 for s in specs) == 15
    assert sum(len(s.I) == 3 for s in specs) == 15
    for s in specs:
        assert s.edges() == set(S)
        assert s.swapped() not in specs
        if len(s.I) == 2:
            assert not set(s.I) & set(s.J) and len(s.K) == 1
        else:
            assert len(set(s.I) & set(s.J)) == 1 and not s.K
    with pytest.raises(GraphError):
        enumerate_dodgson_specs(S[:4])


def _all_small_specs(g):
    labels = g.labels
    for k in range(0, 3):
        for I in itertools.combinations(labels, k):
            for J in itertools.combinations(labels, k):
                for K in itertools.chain([()], ((x,) for x in labels if x not in I and x not in J)):
                    yield DodgsonSpec.of(I, J, K)


@settings(max_examples=25, deadline=None)
@given(multigraphs(max_vertices=4, max_edges=6))
def test_tree_method_matches_matrix_up_to_epsilon(g):
    fx = IncidenceFixture(g)
    for spec in _all_small_specs(g):
        tree = dodgson(g, spec, fx)
        assert all(abs(c) == 1 for c in tree.coefficients())
        assert epsilon(g, spec) * tree == dodgson_matrix_oracle(g, spec, fx)


def test_five_invariant_transposition_negates():
    g = builtin("K33")
    S = nonsplitting_configs(g)[0]
    e1, e2, e3, e4, e5 = S
    assert five_invariant_raw(g, [e1, e3, e2, e4, e5]) == -five_invariant_raw(g, S)


@pytest.mark.parametrize("name", ["K33", "zigzag(1)", "K4"])
def test_five_invariant_permutations_change_only_sign(name):
    g = builtin(name)
    fx = IncidenceFixture(g)
    rng = random.Random(3)
    S = list(rng.sample(g.labels, 5))
    base = five_invariant_raw(g, S, fx)
    for perm in itertools.permutations(S):
        p = five_invariant_raw(g, perm, fx)
        assert p == base or p == -base


@pytest.mark.parametrize("name", ["K4", "zigzag(1)", "C4chord"])
def test_split_five_invariant_factors(name):
    g = builtin(name)
    fx = IncidenceFixture(g)
    for S in itertools.combinations(g.labels, 5):
        if first_zero_dodgson(g, S) is None:
            continue
        f = five_invariant_raw(g, S, fx)
        ds = [dodgson_signed(g, s, fx) for s in enumerate_dodgson_specs(S)]
        assert any(f == x * y or f == -(x * y) for x, y in itertools.combinations_with_replacement(ds, 2))


def test_k5_five_invariant_content_has_degree_four():
    g = builtin("K5")
    S = nonsplitting_configs(g)[0]
    m, _ = monomial_content(five_invariant(g, S))
    assert mono_degree(m) == 4


def test_five_invariant_needs_distinct_edges():
    with pytest.raises(GraphError):
        five_invariant(builtin("K4"), ["e1", "e1", "e2", "e3", "e4"])


def test_reduction_step_on_product():
    rng = random.Random(11)
    names = ["a", "b", "c"]
    v = Polynomial.var("v")

    def lin():
        return sum((rng.randint(-3, 3) * Polynomial.var(x) for x in names), Polynomial.const(rng.randint(-3, 3)))

    for _ in range(50):
        f1, f0, g1, g0 = lin(), lin(), lin(), lin()
        r = reduction_step((f1 * v + f0) * (g1 * v + g0), "v")
        d = f1 * g0 - f0 * g1
        assert r == d or r == -d


def test_denominator_reduce_zigzag():
    g = builtin("zigzag(1)")
    trace = denominator_reduce(g, g.labels)
    assert not trace.status.startswith("non-square discriminant at step 5")
    assert trace.steps[0].index == 5
    assert len(trace.steps) > 1


def test_denominator_reduce_zero_start():
    # the doubled edge e1 e2 among the first five makes the five-invariant vanish
    g = from_pairs([(1, 2), (1, 2), (2, 3), (3, 4), (1, 4), (2, 4)])
    trace = denominator_reduce(g, g.labels)
    assert trace.status == "reduced to zero"
    assert trace.steps[0].index == 5 and trace.steps[0].poly.is_zero()


def test_denominator_reduce_constant_end():
    g = from_pairs([(1, 2), (1, 3), (2, 4), (3, 4), (2, 3), (1, 4)])
    trace = denominator_reduce(g, ["e1", "e2", "e5", "e3", "e4", "e6"])
    assert trace.status == "reduced to constant"
    assert trace.last == Polynomial.const(1) or trace.last == Polynomial.const(-1)


def test_denominator_reduce_validates_order():
    g = builtin("K4")
    with pytest.raises(GraphError):
        denominator_reduce(g, g.labels[:-1])
    with pytest.raises(GraphError):
        denominator_reduce(builtin("C4chord"), builtin("C4chord").labels)
