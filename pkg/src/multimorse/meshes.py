"""Small standard triangulations and the worked-example fixtures."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .complex import SimplicialComplex
from .field import DiscreteVectorField
from .filtration import AdmissibleFunction, max_extension

Point = tuple[float, float, float]


@dataclass
class Mesh:
    complex: SimplicialComplex
    triangles: list[tuple[int, int, int]]
    coords: list[Point] | None = None
    names: list[str] | None = None

    @classmethod
    def from_triangles(
        cls, triangles: Sequence[Sequence[int]], coords: Sequence[Sequence[float]] | None = None, n_vertices: int | None = None
    ) -> "Mesh":
        """Insert triangle closures in the given order, then any vertex no triangle uses."""
        K = SimplicialComplex()
        tris = []
        for t in triangles:
            key = tuple(sorted(t))
            if len(set(key)) != 3:
                raise ValueError(f"degenerate triangle {tuple(t)}")
            K.insert_simplex(key)
            tris.append(tuple(t))
        n = n_vertices if n_vertices is not None else (len(coords) if coords is not None else 0)
        for v in range(n):
            K.insert_simplex((v,))
        pts = [tuple(float(x) for x in p) for p in coords] if coords is not None else None
        return cls(K.freeze(), tris, pts)  # type: ignore[arg-type]


def _r(x: float) -> float:
    # Round away trigonometric noise so symmetric vertices tie exactly; +0.0 folds -0.0.
    return round(x, 12) + 0.0


# -- closed surfaces -------------------------------------------------------------

def tetrahedron_boundary() -> Mesh:
    pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return Mesh.from_triangles([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], pts)


def octahedron() -> Mesh:
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    tris = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return Mesh.from_triangles(tris, pts)


def octasphere(level: int) -> Mesh:
    """Octahedron with each face split into level**2 triangles, projected onto the unit sphere."""
    n = max(1, level)
    index: dict[tuple[int, int, int], int] = {}
    pts: list[Point] = []

    def vid(a: int, b: int, c: int) -> int:
        key = (a, b, c)
        if key not in index:
            x, y, z = a / n, b / n, c / n
            norm = math.sqrt(x * x + y * y + z * z)
            index[key] = len(pts)
            pts.append((_r(x / norm), _r(y / norm), _r(z / norm)))
        return index[key]

    tris = []
    for sx, sy, sz in product((1, -1), repeat=3):
        def p(i: int, j: int) -> int:
            # barycentric lattice point (n - i - j, i, j) of this octant's face
            a, b, c = n - i - j, i, j
            return vid(sx * a if a else 0, sy * b if b else 0, sz * c if c else 0)

        for i in range(n):
            for j in range(n - i):
                tris.append((p(i, j), p(i + 1, j), p(i, j + 1)))
                if i + j < n - 1:
                    tris.append((p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)))
    return Mesh.from_triangles(tris, pts)


def torus(nu: int, nv: int, R: float = 2.0, r: float = 1.0) -> Mesh:
    """Parametric torus around the z axis; u runs around the z axis, v around the tube."""
    if nu < 3 or nv < 3:
        raise ValueError("a simplicial torus grid needs at least 3x3 vertices")
    pts: list[Point] = []
    for i in range(nu):
        u = 2 * math.pi * i / nu
        for j in range(nv):
            v = 2 * math.pi * j / nv
            rho = R + r * math.cos(v)
            pts.append((_r(rho * math.cos(u)), _r(rho * math.sin(u)), _r(r * math.sin(v))))

    def vid(i: int, j: int) -> int:
        return (i % nu) * nv + (j % nv)

    tris = []
    for i in range(nu):
        for j in range(nv):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)
            tris += [(a, b, c), (a, c, d)]
    return Mesh.from_triangles(tris, pts)


def torus7() -> Mesh:
    """Minimal 7-vertex torus."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return Mesh.from_triangles(tris, n_vertices=7)


def projective_plane6() -> Mesh:
    """6-vertex real projective plane (half icosahedron)."""
    tris = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
            (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    return Mesh.from_triangles([tuple(v - 1 for v in t) for t in tris], n_vertices=6)


def klein_bottle9() -> Mesh:
    """3x3 grid with the i-direction glued with a flip: (3, j) ~ (0, -j)."""
    def vid(i: int, j: int) -> int:
        if i == 3:
            i, j = 0, -j
        return 3 * i + j % 3

    tris = []
    for i in range(3):
        for j in range(3):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)
            tris += [(a, b, c), (a, c, d)]
    return Mesh.from_triangles(tris, n_vertices=9)


def dunce_hat() -> Mesh:
    """Triangle with its three sides glued to one edge by the word a a a^-1.

    The glued edge is split into three segments (labels 0, 1, 2, with 0 the
    collapsed corner). The 9-gon boundary is joined to an inner ring of 9
    vertices, and the ring is fanned to a centre vertex. Every triangle then
    touches at most one boundary edge, so the quotient stays simplicial.
    """
    boundary = [0, 1, 2, 0, 1, 2, 0, 2, 1]  # P0 -> P1 -> P2, then back to P0 against a
    corners = [(0.0, 0.0), (3.0, 0.0), (1.5, 2.6)]
    outer = []
    for side in range(3):
        (x0, y0), (x1, y1) = corners[side], corners[(side + 1) % 3]
        outer += [(x0 + (x1 - x0) * t / 3, y0 + (y1 - y0) * t / 3) for t in range(3)]
    cx, cy = 1.5, 2.6 / 3
    pts: list[Point] = [(0.0, 0.0, 0.0)] * 3
    for k in (1, 2):
        pts[k] = (*outer[k], 0.0)
    ring = []
    for x, y in outer:
        ring.append(len(pts))
        pts.append((cx + (x - cx) / 2, cy + (y - cy) / 2, 0.0))
    centre = len(pts)
    pts.append((cx, cy, 0.0))
    tris = []
    for k in range(9):
        k1 = (k + 1) % 9
        tris.append((boundary[k], boundary[k1], ring[k]))
        tris.append((boundary[k1], ring[k], ring[k1]))
        tris.append((ring[k], ring[k1], centre))
    return Mesh.from_triangles(tris, pts)


# -- worked examples ------------------------------------------------------------

SQUARE_NAMES = ["C", "A", "B", "D"]
SQUARE_VERTEX_VALUES = {"A": (1.0, 2.0), "B": (0.0, 0.0), "C": (0.0, 0.0), "D": (2.0, 1.0)}


def labeled_square() -> tuple[SimplicialComplex, AdmissibleFunction, list[str]]:
    """Two triangles ACD, ABD glued along AD; ids 0..10 run C, A, B, D, AC, AB, BD, CD, AD, ACD, ABD."""
    K = SimplicialComplex()
    n = {name: i for i, name in enumerate(SQUARE_NAMES)}
    order = ["C", "A", "B", "D", "AC", "AB", "BD", "CD", "AD", "ACD", "ABD"]
    for word in order:
        K.insert_simplex(sorted(n[c] for c in word))
    K.freeze()
    f = max_extension(K, {n[k]: v for k, v in SQUARE_VERTEX_VALUES.items()})
    return K, f, SQUARE_NAMES


def square_id(K: SimplicialComplex, word: str) -> int:
    return K.id_of(SQUARE_NAMES.index(c) for c in word)


def filtered_square() -> tuple[SimplicialComplex, AdmissibleFunction, dict[str, int], DiscreteVectorField]:
    """Unit square ABDC split along AD, with a hand-given (non max-extension) f and a compatible field."""
    names = {"A": 0, "B": 1, "C": 2, "D": 3}
    values = {
        "A": (1, 1), "B": (1, 0), "C": (0, 1), "D": (2, 0),
        "AB": (2, 1), "AC": (1, 2), "AD": (2, 1), "BD": (2, 0), "CD": (2, 2),
        "ABD": (2, 1), "ACD": (2, 2),
    }
    K = SimplicialComplex()
    for word in values:
        K.insert_simplex(sorted(names[c] for c in word))
    K.freeze()
    ids = {w: K.id_of(names[c] for c in w) for w in values}
    f = AdmissibleFunction(tuple(tuple(float(x) for x in values[K.label(s, "ABCD")]) for s in range(len(K))))
    V = DiscreteVectorField(
        K,
        {ids["D"]: ids["BD"], ids["AB"]: ids["ABD"], ids["CD"]: ids["ACD"]},
        {ids[w] for w in ("A", "B", "C", "AC", "AD")},
    )
    return K, f, ids, V


def circle(n: int = 12) -> Mesh:
    """Regular n-gon on the unit circle; vertex i at angle 2*pi*i/n."""
    K = SimplicialComplex()
    pts: list[Point] = []
    for i in range(n):
        a = 2 * math.pi * i / n
        pts.append((_r(math.cos(a)), _r(math.sin(a)), 0.0))
        K.insert_simplex((i,))
    for i in range(n):
        K.insert_simplex(tuple(sorted((i, (i + 1) % n))))
    return Mesh(K.freeze(), [], pts)


def vertex_function(mesh: Mesh, axes: str = "xy") -> dict[int, tuple[float, ...]]:
    from .complex import AXES

    assert mesh.coords is not None
    return {v: tuple(mesh.coords[v][AXES[a]] for a in axes) for v in range(len(mesh.coords))}
