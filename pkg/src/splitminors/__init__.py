"""Splitting of Feynman-type multigraphs and the forbidden minors for it."""

from .canonical import canonical_form, is_isomorphic
from .kirchhoff import (
    DodgsonSpec,
    IncidenceFixture,
    OracleScaleError,
    denominator_reduce,
    dodgson,
    dodgson_signed,
    enumerate_dodgson_specs,
    five_invariant,
    kirchhoff_poly,
)
from .multigraph import GraphError, Multigraph, contract_edge, delete_edge, take_minor
from .polynomial import NotQuadraticError, Polynomial, parse, to_str
from .splitting import (
    config_splits,
    graph_splits,
    is_minor_minimal_nonsplitting,
    nonsplitting_configs,
    split_counts,
)
from .structure import builtin, delta_y_family, forbidden_minor_scan, has_minor, planar_dual

__all__ = [
    "DodgsonSpec",
    "GraphError",
    "IncidenceFixture",
    "Multigraph",
    "NotQuadraticError",
    "OracleScaleError",
    "Polynomial",
    "builtin",
    "canonical_form",
    "config_splits",
    "contract_edge",
    "delete_edge",
    "delta_y_family",
    "denominator_reduce",
    "dodgson",
    "dodgson_signed",
    "enumerate_dodgson_specs",
    "five_invariant",
    "forbidden_minor_scan",
    "graph_splits",
    "has_minor",
    "is_isomorphic",
    "is_minor_minimal_nonsplitting",
    "kirchhoff_poly",
    "nonsplitting_configs",
    "parse",
    "planar_dual",
    "split_counts",
    "take_minor",
    "to_str",
]
