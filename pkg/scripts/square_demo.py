"""Run the generator on the labeled two-triangle square and print the trace."""
import argparse

from multimorse.homology import morse_count_check
from multimorse.mdm import generate_mdm
from multimorse.meshes import labeled_square
from multimorse.pareto import critical_components


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=float, default=0.5)
    args = ap.parse_args()

    K, f, names = labeled_square()
    res = generate_mdm(K, f, epsilon=args.eps)
    lab = lambda s: K.label(s, names)  # noqa: E731
    print(f"delta = {res.g.delta_exact} = {res.g.delta:.6f}")
    print(f"{'simplex':>8} {'f':>12} {'g (symbolic)':>22} {'g (realized)':>22}")
    for s in range(len(K)):
        v = res.g[s]
        sym = f"({v.base[0]:g}+{v.bump}d, {v.base[1]:g})" if v.bump else str(tuple(v.base))
        real = "(" + ", ".join(f"{x:.4f}" for x in v.realize(res.g.delta)) + ")"
        print(f"{lab(s):>8} {str(f[s]):>12} {sym:>22} {real:>22}")
    print("processing order:")
    for s, role, step in res.trace.order:
        print(f"  step {step:>2}  {lab(s):>4}  {role}")
    print("pairs:", ", ".join(f"{lab(a)}->{lab(b)}" for a, b in sorted(res.field.pairs.items())))
    print("critical:", ", ".join(lab(s) for s in sorted(res.field.critical)))
    print("relative-perfect:", morse_count_check(K, res.field, f).relative_perfect)
    for rel in ("g", "gprime", "f"):
        C = critical_components(K, res.g, res.field, f, rel)
        print(f"{C.relation:>12}: " + " | ".join(" ".join(lab(s) for s in b) for b in C.blocks))


if __name__ == "__main__":
    main()
