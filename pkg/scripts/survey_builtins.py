"""Non-splitting counts, orbit counts and minimality for the named graphs.

    python3 scripts/survey_builtins.py
    python3 scripts/survey_builtins.py K5 O prism2 --jobs 1
"""

from __future__ import annotations

import argparse
import time

from splitminors.splitting import (
    configuration_orbits,
    default_jobs,
    is_minor_minimal_nonsplitting,
    nonsplitting_configs,
)
from splitminors.structure import builtin, delta_y_family, forbidden_minor_scan
from splitminors.structure import BUILTIN_NAMES

DEFAULT = ["K4", "K5", "K33", "O", "H", "C", "Q", "prism2", "prism2dual", "zigzag(2)"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("names", nargs="*", default=DEFAULT, help=f"builtin names ({', '.join(BUILTIN_NAMES)})")
    ap.add_argument("--jobs", type=int, default=default_jobs())
    args = ap.parse_args()
    head = f"{'graph':>11} {'V':>3} {'E':>3} {'nonsplit':>8} {'orbits':>6} {'minimal':>8} {'family':>6}  minors"
    print(head)
    cache: dict = {}
    for name in args.names:
        t = time.time()
        g = builtin(name)
        ns = nonsplitting_configs(g, args.jobs)
        orbits = len(configuration_orbits(g, ns)) if ns else 0
        minimal = "-"
        if ns:
            minimal = "yes" if is_minor_minimal_nonsplitting(g, args.jobs, cache).minimal else "no"
        fam = len(delta_y_family(g, cap=5000))
        minors = " ".join(sorted(forbidden_minor_scan(g))) or "none"
        print(
            f"{name:>11} {g.n_vertices:>3} {g.n_edges:>3} {len(ns):>8} {orbits:>6} {minimal:>8} {fam:>6}"
            f"  {minors}  [{time.time() - t:.1f}s]",
            flush=True,
        )


if __name__ == "__main__":
    main()
