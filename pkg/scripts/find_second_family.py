"""Search for minor-minimal non-splitting multigraphs outside the known families.

Random planar multigraphs that fail to split are reduced greedily (delete or
contract any edge whose minor still fails to split) until minimal.  Each new
minimal graph is reported together with the size of its delta-wye family.

    python scripts/find_second_family.py --trials 200 --seed 1
"""

from __future__ import annotations

import argparse
import random
import time

from splitminors.canonical import canonical_form
from splitminors.multigraph import (
    Multigraph,
    contract_edge,
    delete_edge,
    is_connected,
    vertex_connectivity,
)
from splitminors.splitting import graph_splits
from splitminors.structure import builtin, delta_y_family, is_planar


def drop_loops(g: Multigraph) -> Multigraph:
    return Multigraph._raw(g.vertices, [e for e in g.edges if e[1] != e[2]])


def random_graph(rng: random.Random, n: int, m: int) -> Multigraph | None:
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):  # random spanning tree first
        edges.append((order[i], order[rng.randrange(i)]))
    while len(edges) < m:
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    g = Multigraph.from_edges([(f"e{i + 1}", f"v{a}", f"v{b}") for i, (a, b) in enumerate(edges)])
    if min(g.degrees.values()) < 3 or vertex_connectivity(g, 2) < 2:
        return None
    return g if is_planar(g) else None


class Reducer:
    def __init__(self):
        self.cache: dict[bytes, bool] = {}

    def splits(self, g: Multigraph) -> bool:
        k = canonical_form(g)
        if k not in self.cache:
            self.cache[k] = graph_splits(g)
        return self.cache[k]

    def minimise(self, g: Multigraph, rng: random.Random) -> Multigraph:
        while True:
            labels = list(g.labels)
            rng.shuffle(labels)
            for e in labels:
                found = None
                for op in (delete_edge, contract_edge):
                    h = drop_loops(op(g, e))
                    if not is_connected(h):
                        continue
                    if not self.splits(h):
                        found = h
                        break
                if found is not None:
                    g = found
                    break
            else:
                return g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--nmin", type=int, default=5)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--slack", type=int, default=4, help="edges beyond 2|V| - 2")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    red = Reducer()
    known: dict[bytes, str] = {}
    for name in ("K5", "K33", "O"):
        for k in delta_y_family(builtin(name)):
            known[k] = name
    reported = set()
    t0 = time.time()
    for trial in range(args.trials):
        n = rng.randint(args.nmin, args.nmax)
        g = random_graph(rng, n, 2 * n - 2 + rng.randint(0, args.slack))
        if g is None or red.splits(g):
            continue
        h = red.minimise(g, rng)
        key = canonical_form(h)
        if key in known or key in reported:
            continue
        reported.add(key)
        try:
            size = len(delta_y_family(h, cap=5000))
        except Exception as exc:  # cap exceeded
            size = f"> cap ({exc})"
        print(f"[{time.time() - t0:7.1f}s] trial {trial}: new minimal graph, |V|={h.n_vertices} |E|={h.n_edges} family={size}")
        print("   ", " ".join(f"{l}:{u}-{v}" for l, u, v in h.edges), flush=True)


if __name__ == "__main__":
    main()
