"""Family sizes under looser readings of the delta-wye exchange.

The library's exchange uses a triangle on three distinct vertices with no
other edge among them, and a degree-3 vertex with three distinct neighbours.
This script relaxes those rules one switch at a time and reports the family
sizes for the usual seeds, so the counts can be compared across readings:

    python3 scripts/deltay_variants.py --cap 1500

Switches:
  multi      triangles whose corners carry extra parallel edges are allowed
  degtri     degenerate triangles: corners (a, a, b) use a loop at a
  repstar    degree-3 vertices with a repeated neighbour (creates loops)
"""

from __future__ import annotations

import argparse
import itertools
from collections import deque

from splitminors.canonical import canonical_form
from splitminors.multigraph import Multigraph, sort_key
from splitminors.structure import builtin
from splitminors.structure.deltay import _fresh, _tidy

def moves(g: Multigraph, multi: bool, degtri: bool, repstar: bool) -> list[Multigraph]:
    out = []
    vs = g.vertices
    corners = list(itertools.combinations(vs, 3))
    if degtri:
        corners += [(a, a, b) for a in vs for b in vs if a != b]
    for cs in corners:
        pairs = [tuple(sorted((cs[i], cs[j]), key=sort_key)) for i, j in ((0, 1), (0, 2), (1, 2))]
        if not multi and len(set(cs)) == 3:
            among = [l for l, u, v in g.edges if u in cs and v in cs]
            if len(among) != 3:
                continue
        used: list[str] = []
        for p in pairs:
            c = [l for l, u, v in g.edges if (u, v) == p and l not in used]
            if not c:
                break
            used.append(c[0])
        else:
            y = _fresh(vs, "y")
            keep = [e for e in g.edges if e[0] not in used]
            out.append(Multigraph.from_edges(keep + [(f"f{i}", cs[i], y) for i in range(3)], vs))
    for v in vs:
        es = [e for e in g.edges if v in (e[1], e[2])]
        if g.degrees[v] != 3 or any(u == w for _, u, w in es):
            continue
        nb = [u if w == v else w for _, u, w in es]
        if len(set(nb)) < 3 and not repstar:
            continue
        keep = [e for e in g.edges if e not in es]
        tri = [("f0", nb[0], nb[1]), ("f1", nb[0], nb[2]), ("f2", nb[1], nb[2])]
        out.append(Multigraph.from_edges(keep + tri, [x for x in vs if x != v]))
    return out


def family_size(g: Multigraph, cap: int, **flags) -> int | None:
    g = _tidy(g)
    seen = {canonical_form(g)}
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for n in moves(h, **flags):
            n = _tidy(n)
            k = canonical_form(n)
            if k not in seen:
                seen.add(k)
                queue.append(n)
                if len(seen) > cap:
                    return None
    return len(seen)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cap", type=int, default=1500)
    args = ap.parse_args()
    seeds = {
        "O": builtin("O"),
        "K33": builtin("K33"),
        "K5": builtin("K5"),
        "prism2": builtin("prism2"),
        "prism2dual": builtin("prism2dual"),
    }
    print("multi degtri repstar | " + " ".join(f"{k:>8}" for k in seeds))
    for multi, degtri, repstar in itertools.product((False, True), repeat=3):
        sizes = [family_size(g, args.cap, multi=multi, degtri=degtri, repstar=repstar) for g in seeds.values()]
        cells = " ".join(f"{s if s is not None else '>cap':>8}" for s in sizes)
        print(f"{multi!s:>5} {degtri!s:>6} {repstar!s:>7} | {cells}", flush=True)


if __name__ == "__main__":
    main()
