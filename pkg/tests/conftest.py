import os
import random
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from multimorse.complex import SimplicialComplex  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_complex(rng: random.Random, n_vertices: int, n_triangles: int, n_edges: int = 0) -> SimplicialComplex:
    """Random 2-complex: triangles and loose edges over a vertex pool, plus every vertex."""
    K = SimplicialComplex()
    verts = list(range(n_vertices))
    for v in verts:
        if rng.random() < 0.5:
            K.insert_simplex((v,))
    for _ in range(n_triangles):
        K.insert_simplex(sorted(rng.sample(verts, 3)))
    for _ in range(n_edges):
        K.insert_simplex(sorted(rng.sample(verts, 2)))
    for v in verts:
        K.insert_simplex((v,))
    return K.freeze()


def random_vertex_map(rng: random.Random, K: SimplicialComplex, k: int, levels: int | None = None):
    """Values drawn from a small grid when ``levels`` is set so that ties (and big level sets) happen."""
    def draw():
        return float(rng.randrange(levels)) if levels else rng.random()

    return {v: tuple(draw() for _ in range(k)) for v in K.vertex_ids}


@st.composite
def complexes(draw, max_vertices: int = 9, max_triangles: int = 12):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(3, max_vertices))
    t = draw(st.integers(0, max_triangles))
    e = draw(st.integers(0, 4))
    return random_complex(random.Random(seed), n, t, e)


@st.composite
def complex_and_vertex_map(draw, max_vertices: int = 9, max_triangles: int = 12, k_values=(1, 2, 3)):
    K = draw(complexes(max_vertices, max_triangles))
    k = draw(st.sampled_from(k_values))
    levels = draw(st.sampled_from([None, 2, 3, 5]))
    seed = draw(st.integers(0, 2**32 - 1))
    return K, random_vertex_map(random.Random(seed), K, k, levels)
