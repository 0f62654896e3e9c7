"""Pareto and critical-component counts for f = (x, y) on tori and spheres of growing resolution."""
import argparse
import time

from multimorse.filtration import projection_map
from multimorse.homology import morse_count_check
from multimorse.mdm import generate_mdm
from multimorse.meshes import octasphere, torus
from multimorse.pareto import critical_components, pareto_set


def row(name, mesh):
    K = mesh.complex
    f = projection_map(K, mesh.coords, "xy")
    t0 = time.perf_counter()
    P = pareto_set(K, f)
    res = generate_mdm(K, f)
    comps = [len(critical_components(K, res.g, res.field, f, r)) for r in ("g", "gprime", "f")]
    rp = morse_count_check(K, res.field, f).relative_perfect
    dt = time.perf_counter() - t0
    m = " ".join(map(str, res.field.critical_by_dim()))
    print(f"{name:<16} {len(K):>7} {P.n_components:>7} {comps[0]:>6} {comps[1]:>6} {comps[2]:>6} {m:>12} {str(rp):>6} {dt:>7.2f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-grid", type=int, default=48)
    args = ap.parse_args()
    print(f"{'mesh':<16} {'|K|':>7} {'pareto':>7} {'~g':>6} {'~g′':>6} {'~f':>6} {'m0 m1 m2':>12} {'relp':>6} {'sec':>7}")
    for n in (8, 12, 16, 24, 32, 48, 64):
        if n > args.max_grid:
            break
        row(f"torus {n}x{max(6, 3 * n // 4)}", torus(n, max(6, 3 * n // 4)))
    for lvl in (2, 4, 8, 12):
        row(f"sphere {lvl}", octasphere(lvl))


if __name__ == "__main__":
    main()
