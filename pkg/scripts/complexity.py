"""Wall-clock scaling of the generator on tori with a generic (componentwise-injective) filtration."""
import argparse
import random
import time

import numpy as np

from multimorse.filtration import level_sets, level_stats, max_extension
from multimorse.mdm import generate_mdm
from multimorse.meshes import torus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grids", type=int, nargs="+", default=[13, 20, 32, 50, 80, 128])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=5)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    sizes, times = [], []
    print(f"{'|K|':>8} {'|f(K)|':>8} {'lambda':>7} {'sec':>8}")
    for n in args.grids:
        M = torus(n, n)
        K = M.complex
        f = max_extension(K, {v: tuple(rng.random() for _ in range(args.k)) for v in range(len(M.coords))})
        nl, lam = level_stats(level_sets(K, f))
        best = min(_timed(K, f) for _ in range(args.repeats))
        sizes.append(len(K))
        times.append(best)
        print(f"{len(K):>8} {nl:>8} {lam:>7} {best:>8.3f}")
    slope, _ = np.polyfit(np.log(sizes), np.log(times), 1)
    print(f"log-log slope: {slope:.3f}")


def _timed(K, f) -> float:
    t0 = time.perf_counter()
    generate_mdm(K, f, check=False)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
