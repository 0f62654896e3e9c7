"""Critical counts with f = 0 against Betti numbers on small standard triangulations."""
from multimorse.complex import axis_indexing_map
from multimorse.filtration import AdmissibleFunction
from multimorse.homology import betti_numbers
from multimorse.mdm import generate_mdm
from multimorse.meshes import dunce_hat, klein_bottle9, octasphere, projective_plane6, torus, torus7

FIXTURES = [
    ("sphere (octasphere 3)", octasphere(3), "z"),
    ("sphere (octasphere 8)", octasphere(8), "z"),
    ("torus 7 vertices", torus7(), "z"),
    ("torus 32x16", torus(32, 16), "z"),
    ("Klein bottle (Z2)", klein_bottle9(), "z2"),
    ("projective plane (Z2)", projective_plane6(), "z2"),
    ("dunce hat", dunce_hat(), "z"),
]


def main() -> None:
    print(f"{'complex':<24} {'|K|':>6} {'index':>9}  {'m0 m1 m2':>10}  {'b0 b1 b2':>10}")
    for name, mesh, ring in FIXTURES:
        K = mesh.complex
        beta = betti_numbers(K, ring).betti
        f = AdmissibleFunction.constant(K, (0.0,))
        maps = {"insertion": None}
        if mesh.coords is not None:
            maps["z+"] = axis_indexing_map(K, mesh.coords, "z", "+")
            maps["x-"] = axis_indexing_map(K, mesh.coords, "x", "-")
        for label, I in maps.items():
            m = generate_mdm(K, f, I).field.critical_by_dim()
            print(f"{name:<24} {len(K):>6} {label:>9}  {' '.join(map(str, m)):>10}  {' '.join(map(str, beta)):>10}")


if __name__ == "__main__":
    main()
