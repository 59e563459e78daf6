"""Command-line front end: graph files, subcommands and reports.

Graph files hold one edge per line as ``<label> <u> <v>`` (a loop when
``u == v``).  ``#`` starts a comment and an optional ``vertices: ...`` line
declares isolated vertices.  ``builtin:NAME`` may stand in for any file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .canonical import canonical_form
from .kirchhoff import (
    DodgsonSpec,
    IncidenceFixture,
    OracleScaleError,
    denominator_reduce,
    dodgson_matrix_oracle,
    dodgson_signed,
    five_invariant,
    kirchhoff_poly,
)
from .multigraph import GraphError, Multigraph
from .polynomial import NotQuadraticError, is_linear_in_every_variable, mono_str, monomial_content, to_str
from .splitting import (
    SplitContext,
    config_splits,
    configuration_orbits,
    configurations,
    default_jobs,
    first_zero_dodgson,
    is_minor_minimal_nonsplitting,
    nonsplitting_configs,
)
from .structure import (
    FamilyCapError,
    builtin,
    delta_y_family,
    forbidden_minor_scan,
    is_planar,
    planar_dual,
    primitive_divergent,
    three_cut_edge_ordering,
)

FORMAT_VERSION = "1"


class UsageError(Exception):
    """Bad command line or malformed input; exit code 1."""


# -- graph files -------------------------------------------------------------------


def parse_graph(text: str, source: str = "<input>") -> Multigraph:
    edges = []
    extra: list[str] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if line.startswith("vertices:"):
            extra.extend(line[len("vertices:") :].split())
            continue
        parts = line.split()
        if len(parts) != 3:
            raise UsageError(f"{where}: expected '<label> <u> <v>', got {line!r}")
        label = parts[0]
        if label in seen:
            raise UsageError(f"{where}: duplicate edge label {label!r}")
        seen.add(label)
        edges.append(tuple(parts))
    try:
        return Multigraph.from_edges(edges, vertices=extra)
    except GraphError as exc:
        raise UsageError(f"{source}: {exc}") from None


def format_graph(g: Multigraph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    lines += [f"{l} {u} {v}" for l, u, v in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(arg: str) -> Multigraph:
    if arg.startswith("builtin:"):
        try:
            return builtin(arg[len("builtin:") :])
        except GraphError as exc:
            raise UsageError(f"{arg}: {exc}") from None
    path = Path(arg)
    if not path.is_file():
        raise UsageError(f"no such graph file {arg!r}")
    return parse_graph(path.read_text(), arg)


def _edge_list(g: Multigraph, text: str, flag: str) -> list[str]:
    items = [t for t in text.split(",") if t] if text else []
    for t in items:
        if t not in g.edge_map:
            raise UsageError(f"{flag}: no such edge {t!r}")
    if len(set(items)) != len(items):
        raise UsageError(f"{flag}: repeated edge in {text!r}")
    return items


# -- reports -------------------------------------------------------------------------


class Report:
    """Ordered key/value report; list values print one item per line."""

    def __init__(self, command: str):
        self.items: list[tuple[str, object]] = [("format-version", FORMAT_VERSION), ("command", command)]

    def add(self, key: str, value) -> "Report":
        self.items.append((key, value))
        return self

    def fixture(self, g: Multigraph) -> "Report":
        fx = IncidenceFixture(g)
        self.add("vertex-order", " ".join(fx.vertex_order))
        self.add("edge-order", " ".join(fx.edge_order))
        self.add("deleted-vertex", fx.deleted_vertex or "")
        return self.add("orientation", "smaller endpoint -> larger endpoint")

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(dict(self.items), indent=1) + "\n"
        out = []
        for k, v in self.items:
            if isinstance(v, list):
                out.append(f"{k}:")
                out.extend(f"  {x}" for x in v)
            elif isinstance(v, str) and "\n" in v:
                out.append(f"{k}:")
                out.extend(f"  {x}" for x in v.rstrip("\n").split("\n"))
            else:
                out.append(f"{k}: {v}")
        return "\n".join(out) + "\n"


def _yes(b: bool) -> str:
    return "yes" if b else "no"


# -- commands --------------------------------------------------------------------------


def cmd_psi(a) -> Report:
    g = load_graph(a.file)
    return Report("psi").fixture(g).add("psi", to_str(kirchhoff_poly(g)))


def cmd_dodgson(a) -> Report:
    g = load_graph(a.file)
    I = _edge_list(g, a.I, "--I")
    J = _edge_list(g, a.J, "--J")
    K = _edge_list(g, a.K, "--K")
    if len(I) != len(J):
        raise UsageError(f"--I and --J differ in size ({len(I)} vs {len(J)})")
    spec = DodgsonSpec.of(I, J, K)
    p = dodgson_signed(g, spec)
    r = Report("dodgson").fixture(g).add("spec", str(spec)).add("dodgson", to_str(p))
    if a.oracle:
        r.add("oracle-agrees", _yes(dodgson_matrix_oracle(g, spec) == p))
    return r


def cmd_five_inv(a) -> Report:
    g = load_graph(a.file)
    edges = _edge_list(g, ",".join(a.edges), "edges")
    if len(edges) != 5:
        raise UsageError(f"five-inv needs 5 distinct edges, got {len(edges)}")
    p = five_invariant(g, edges)
    r = Report("five-inv").fixture(g).add("configuration", " ".join(edges)).add("five-invariant", to_str(p))
    if not p.is_zero():
        m, cof = monomial_content(p)
        r.add("monomial-content", mono_str(m)).add("cofactor", to_str(cof))
        r.add("cofactor-linear-in-every-variable", _yes(is_linear_in_every_variable(cof)))
    return r


def cmd_split(a) -> Report:
    g = load_graph(a.file)
    r = Report("split").fixture(g)
    if a.config:
        S = _edge_list(g, a.config, "--config")
        if len(S) != 5:
            raise UsageError(f"--config needs 5 distinct edges, got {len(S)}")
        rep = config_splits(g, S)
        r.add("configuration", " ".join(rep.configuration)).add("verdict", rep.verdict)
        r.add("witness", str(rep.witness) if rep.witness else "none")
        r.add("shortcut", rep.shortcut or "none")
        return r
    if a.check:
        # slow path: every configuration gets the Dodgson test, shortcuts are audited
        ctx = SplitContext(g)
        ns, tagged = [], 0
        for S in configurations(g):
            tag = ctx.shortcut(S)
            zero = first_zero_dodgson(g, S) is not None
            if tag is not None:
                tagged += 1
                if not zero:
                    raise AssertionError(f"shortcut {tag} fired on non-splitting configuration {S}")
            if not zero:
                ns.append(S)
        r.add("shortcut-verdicts-confirmed", tagged)
    else:
        ns = nonsplitting_configs(g, a.jobs)
    total = len(configurations(g))
    r.add("non-splitting", len(ns)).add("splitting", total - len(ns)).add("total", total)
    r.add("summary", f"{len(ns)} non-splitting / {total - len(ns)} splitting of {total}")
    return r


def cmd_nonsplit_configs(a) -> Report:
    g = load_graph(a.file)
    ns = nonsplitting_configs(g, a.jobs)
    orbits = configuration_orbits(g, ns)
    r = Report("nonsplit-configs").fixture(g).add("count", len(ns)).add("orbits", len(orbits))
    return r.add("configurations", [" ".join(S) for S in ns])


def cmd_minor_minimal(a) -> Report:
    g = load_graph(a.file)
    rep = is_minor_minimal_nonsplitting(g, a.jobs)
    r = Report("minor-minimal").fixture(g).add("non-splitting", len(rep.nonsplitting))
    return r.add("minor-minimal", _yes(rep.minimal)).add("conclusion", rep.conclusion)


def cmd_scan_minors(a) -> Report:
    g = load_graph(a.file)
    found = sorted(forbidden_minor_scan(g))
    return Report("scan-minors").fixture(g).add("forbidden-minors", " ".join(found) or "none")


def cmd_dy_family(a) -> Report:
    g = load_graph(a.file)
    fam = delta_y_family(g, cap=a.cap)
    members = sorted(fam.values(), key=lambda h: (h.n_vertices, canonical_form(h)))
    r = Report("dy-family").fixture(g).add("members", len(members))
    for i, h in enumerate(members, 1):
        r.add(f"member-{i}", " ".join(f"{l}:{u}-{v}" for l, u, v in h.edges))
    return r


def cmd_dual(a) -> Report:
    g = load_graph(a.file)
    if is_planar(g) is None:
        raise UsageError(f"{a.file}: graph is not planar")
    d = planar_dual(g)
    return Report("dual").fixture(g).add("dual", format_graph(d))


def cmd_primdiv(a) -> Report:
    g = load_graph(a.file)
    rep = primitive_divergent(g)
    r = Report("primdiv").fixture(g).add("primitive-divergent", _yes(rep.primitive))
    if not rep.primitive:
        r.add("reason", rep.reason)
    return r


def cmd_denred(a) -> Report:
    g = load_graph(a.file)
    order = _edge_list(g, a.order, "--order")
    trace = denominator_reduce(g, order)
    r = Report("denred").fixture(g).add("order", " ".join(order))
    for s in trace.steps:
        head = f"P{s.index}" + (f" [{s.variable}]" if s.variable else "")
        r.add(head if not s.note else f"{head} {s.note}", to_str(s.poly))
    return r.add("status", trace.status)


def cmd_builtin(a) -> Report:
    try:
        g = builtin(a.name, a.n)
    except GraphError as exc:
        raise UsageError(f"{a.name}: {exc}") from None
    return Report("builtin").add("name", a.name).add("graph", format_graph(g))


def cmd_ordering(a) -> Report:
    g = load_graph(a.file)
    res = three_cut_edge_ordering(g)
    r = Report("ordering").fixture(g)
    r.add("order", " ".join(res.order) if res.order else "none").add("method", res.method or "none")
    if res.cut:
        r.add("cut", " ".join(res.cut))
    return r.add("diagnostics", list(res.diagnostics))


# -- entry point -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes for sweeps")

    p = _Parser(prog="splitminors", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def cmd(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    cmd("psi", cmd_psi, "Kirchhoff polynomial").add_argument("file")
    s = cmd("dodgson", cmd_dodgson, "Dodgson polynomial with matrix signs")
    s.add_argument("file")
    s.add_argument("--I", default="")
    s.add_argument("--J", default="")
    s.add_argument("--K", default="")
    s.add_argument("--oracle", action="store_true", help="cross-check against the determinant expansion")
    s = cmd("five-inv", cmd_five_inv, "five-invariant of an ordered 5-configuration")
    s.add_argument("file")
    s.add_argument("edges", nargs=5)
    s = cmd("split", cmd_split, "splitting verdicts")
    s.add_argument("file")
    s.add_argument("--config", default="")
    s.add_argument("--check", action="store_true", help="run the Dodgson test on every configuration")
    cmd("nonsplit-configs", cmd_nonsplit_configs, "list non-splitting configurations").add_argument("file")
    cmd("minor-minimal", cmd_minor_minimal, "minor-minimal non-splitting test").add_argument("file")
    cmd("scan-minors", cmd_scan_minors, "scan for the five forbidden minors").add_argument("file")
    s = cmd("dy-family", cmd_dy_family, "delta-wye family")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=2000)
    cmd("dual", cmd_dual, "planar dual").add_argument("file")
    cmd("primdiv", cmd_primdiv, "primitive divergence test").add_argument("file")
    s = cmd("denred", cmd_denred, "denominator reduction trace")
    s.add_argument("file")
    s.add_argument("--order", required=True)
    s = cmd("builtin", cmd_builtin, "print a named graph")
    s.add_argument("name")
    s.add_argument("--n", type=int, default=None)
    cmd("ordering", cmd_ordering, "3-cut edge ordering").add_argument("file")
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = args.func(args)
    except (OracleScaleError, FamilyCapError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (UsageError, GraphError, NotQuadraticError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    out.write(report.render(args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
