"""Compare the numba and pure-numpy layout kernel backends.

Run both backends from one invocation; the script re-executes itself in a
subprocess with ``MAPPA_DISABLE_NUMBA=1`` to measure the numpy path, since the
backend is chosen at import time.

    python3 benchmarks/bench_layout.py
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import subprocess
import sys
import time

SIZES = (10, 25, 50, 100, 200)
REPEATS = 5


def build_tree(rng: random.Random, n: int):
    from mappamundi.projection import (
        Category,
        LayoutParams,
        MapEdge,
        MapNode,
        MindMapGraph,
        target_length,
    )

    params = LayoutParams()
    g = MindMapGraph(layout_params=params)
    g.nodes.append(MapNode(0, "n0", Category.MOUNTAIN, 0))
    for i in range(1, n):
        p = rng.randrange(i)
        s = rng.random()
        g.nodes.append(MapNode(i, f"n{i}", Category.MOUNTAIN, g.node(p).depth + 1))
        g.edges.append(MapEdge(p, i, "rel", s, target_length(s, params)))
    return g


def run_backend() -> dict:
    from mappamundi import kernels
    from mappamundi.projection import layout

    # warm-up pass so numba JIT/cache loading stays out of the timings
    layout(build_tree(random.Random(0), 10), seed=0)

    results = {"backend": "numba" if kernels.NUMBA_ENABLED else "numpy", "sizes": {}}
    for n in SIZES:
        times = []
        for rep in range(REPEATS):
            g = build_tree(random.Random(1000 + rep), n)
            start = time.perf_counter()
            layout(g, seed=rep)
            times.append(time.perf_counter() - start)
        results["sizes"][n] = statistics.median(times)
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--json", action="store_true", help="emit one backend as JSON")
    args = parser.parse_args()

    if args.json:
        print(json.dumps(run_backend()))
        return

    here = run_backend()
    env = dict(os.environ, MAPPA_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, __file__, "--json"], env=env, capture_output=True, text=True,
        check=True,
    )
    other = json.loads(out.stdout)
    fast, slow = (here, other) if here["backend"] == "numba" else (other, here)

    print(f"{'nodes':>6}  {'numba (ms)':>12}  {'numpy (ms)':>12}  {'speedup':>8}")
    for n in SIZES:
        t_fast = fast["sizes"][str(n)] if str(n) in fast["sizes"] else fast["sizes"][n]
        t_slow = slow["sizes"][str(n)] if str(n) in slow["sizes"] else slow["sizes"][n]
        print(f"{n:>6}  {t_fast * 1e3:>12.2f}  {t_slow * 1e3:>12.2f}  "
              f"{t_slow / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
