"""Write the sample meshes and vertex functions used by the CLI examples into data/."""
from pathlib import Path

from multimorse.io import write_off
from multimorse.meshes import Mesh, dunce_hat, octasphere, projective_plane6, torus, torus7

OUT = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    # labeled square: vertex ids C=0, A=1, B=2, D=3
    square = Mesh.from_triangles([(1, 0, 3), (1, 2, 3)], [(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)])
    write_off(OUT / "square.off", square)
    (OUT / "square.csv").write_text("f1,f2\n0,0\n1,2\n0,0\n2,1\n")
    write_off(OUT / "torus.off", torus(16, 12))
    write_off(OUT / "sphere.off", octasphere(4))
    write_off(OUT / "torus7.off", _with_dummy_coords(torus7()))
    write_off(OUT / "rp2.off", _with_dummy_coords(projective_plane6()))
    write_off(OUT / "dunce_hat.off", dunce_hat())
    print(f"wrote sample data to {OUT}")


def _with_dummy_coords(m: Mesh) -> Mesh:
    # abstract triangulations get vertex i at (i, 0, 0) so the file stays valid OFF
    n = len(m.complex.vertex_ids)
    m.coords = [(float(i), 0.0, 0.0) for i in range(n)]
    return m


if __name__ == "__main__":
    main()
