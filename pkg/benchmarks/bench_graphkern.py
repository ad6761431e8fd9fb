"""Time the compiled and pure-Python graph kernels on the flip graph.

Run ``python3 benchmarks/bench_graphkern.py [--max-n 7] [--repeat 3]``.
"""

from __future__ import annotations

import argparse
import time

from crossmpp.graphkern import backends
from crossmpp.pathspace import enumerate_paths, path_is_coherent


def bench(mod, masks, nbits, sources, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        indptr, indices = mod.toggle_graph(masks, nbits)
        ecc = mod.eccentricities(indptr, indices)
        dist = mod.bfs_distances(indptr, indices, sources)
        best = min(best, time.perf_counter() - t0)
    return best, max(ecc), max(dist)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = backends()
    if "compiled" not in mods:
        print("compiled backend not built; only timing the python fallback")
    print(f"{'n':>2} {'paths':>6} " + " ".join(f"{name:>12}" for name in sorted(mods)) + "  speedup")
    for n in range(3, args.max_n + 1):
        paths = enumerate_paths(n)
        masks = [p.mask for p in paths]
        sources = [i for i, p in enumerate(paths) if path_is_coherent(p)]
        times = {}
        answers = set()
        for name, mod in sorted(mods.items()):
            t, diam, far = bench(mod, masks, 2 * (n - 1), sources, args.repeat)
            times[name] = t
            answers.add((diam, far))
        assert len(answers) == 1, f"backends disagree at n={n}: {answers}"
        speed = f"{times['python'] / times['compiled']:7.1f}x" if "compiled" in times else ""
        print(f"{n:>2} {len(paths):>6} " + " ".join(f"{times[k]:>11.4f}s" for k in sorted(times)) + f"  {speed}")


if __name__ == "__main__":
    main()
