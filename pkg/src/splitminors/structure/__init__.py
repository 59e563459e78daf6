"""Structural tools: named graphs, delta-wye families, planarity, minors."""

from __future__ import annotations

from ..multigraph import GraphError, Multigraph
from .builtins import (
    c4_chord,
    complete,
    complete_bipartite,
    cube,
    graph_h,
    graph_q,
    octahedron,
    prism_doubled_rungs,
    prism_doubled_rungs_dual,
    sq_odd_cycle,
    zigzag,
)
from .deltay import (
    DeltaYSite,
    FamilyCapError,
    delta_to_y,
    delta_y_family,
    neighbours,
    star_sites,
    triangle_sites,
    y_to_delta,
)
from .minors import (
    DivergenceReport,
    MinorCertificate,
    forbidden_minor_scan,
    forbidden_targets,
    has_minor,
    has_well_connected_s2,
    primitive_divergent,
    s2_gadget,
)
from .ordering import OrderingResult, ordering_is_valid, three_cut_edge_ordering
from .planar import RotationSystem, is_planar, planar_dual

_FIXED = {
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K33": lambda: complete_bipartite(3, 3),
    "O": octahedron,
    "C": cube,
    "H": graph_h,
    "Q": graph_q,
    "C4chord": c4_chord,
    "prism2": prism_doubled_rungs,
    "prism2dual": prism_doubled_rungs_dual,
}
_PARAM = {"zigzag": zigzag, "sq_odd_cycle": sq_odd_cycle}

BUILTIN_NAMES = tuple(_FIXED) + tuple(_PARAM)


def builtin(name: str, n: int | None = None) -> Multigraph:
    """Named graph; ``zigzag`` and ``sq_odd_cycle`` take ``n`` (also ``zigzag(3)``)."""
    base, arg = name, n
    if "(" in name and name.endswith(")"):
        base, _, rest = name.partition("(")
        try:
            arg = int(rest[:-1])
        except ValueError:
            raise GraphError(f"bad parameter in {name!r}") from None
    if base in _FIXED:
        return _FIXED[base]()
    if base in _PARAM:
        if arg is None:
            raise GraphError(f"{base} needs a parameter")
        return _PARAM[base](arg)
    raise GraphError(f"unknown builtin graph {name!r}")
