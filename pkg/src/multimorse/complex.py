"""Finite abstract simplicial complexes and their Alexandrov-topology operators.

A simplex is stored canonically as its sorted vertex tuple and identified by its
insertion index, so the insertion order is an admissible indexing map for free.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence


Simplex = tuple[int, ...]


class SimplicialComplex:
    """Face-closed family of vertex sets with precomputed facet/cofacet adjacency."""

    def __init__(self) -> None:
        self.simplices: list[Simplex] = []
        self.dims: list[int] = []
        self.facets: list[list[int]] = []
        self.cofacets: list[list[int]] = []
        self._ids: dict[Simplex, int] = {}
        self._frozen = False

    @classmethod
    def from_simplices(cls, simplices: Iterable[Sequence[int]]) -> "SimplicialComplex":
        K = cls()
        for s in simplices:
            K.insert_simplex(sorted(s))
        return K

    def insert_simplex(self, vertices: Sequence[int]) -> int:
        """Insert a simplex and its full closure; return its id.

        Missing faces are inserted first, lowest dimension first and in
        lexicographic order within a dimension, so every face gets a smaller id.
        """
        key = tuple(vertices)
        if not key:
            raise ValueError("a simplex needs at least one vertex")
        if any(a >= b for a, b in zip(key, key[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {key}")
        found = self._ids.get(key)
        if found is not None:
            return found
        if self._frozen:
            raise RuntimeError("complex is frozen")
        for size in range(1, len(key)):
            for face in combinations(key, size):
                if face not in self._ids:
                    self._append(face)
        return self._append(key)

    def _append(self, key: Simplex) -> int:
        sid = len(self.simplices)
        self.simplices.append(key)
        self.dims.append(len(key) - 1)
        self.facets.append([])
        self.cofacets.append([])
        self._ids[key] = sid
        if len(key) > 1:
            for i in range(len(key)):
                fid = self._ids[key[:i] + key[i + 1:]]
                self.facets[sid].append(fid)
                self.cofacets[fid].append(sid)
        return sid

    def freeze(self) -> "SimplicialComplex":
        self._frozen = True
        return self

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, vertices: object) -> bool:
        return tuple(vertices) in self._ids  # type: ignore[arg-type]

    def id_of(self, vertices: Iterable[int]) -> int:
        return self._ids[tuple(sorted(vertices))]

    def get(self, vertices: Iterable[int]) -> int | None:
        return self._ids.get(tuple(sorted(vertices)))

    @property
    def dimension(self) -> int:
        return max(self.dims, default=-1)

    def of_dim(self, p: int) -> list[int]:
        return [i for i, d in enumerate(self.dims) if d == p]

    def counts(self) -> list[int]:
        out = [0] * (self.dimension + 1)
        for d in self.dims:
            out[d] += 1
        return out

    @property
    def vertex_ids(self) -> dict[int, int]:
        """Map vertex label -> id of the 0-simplex."""
        return {s[0]: i for i, s in enumerate(self.simplices) if len(s) == 1}

    def faces(self, sid: int) -> list[int]:
        """All proper faces of a simplex."""
        key = self.simplices[sid]
        return [self._ids[f] for n in range(1, len(key)) for f in combinations(key, n)]

    def is_face(self, a: int, b: int) -> bool:
        """True iff simplex ``a`` is a face of ``b`` (a <= b)."""
        return set(self.simplices[a]) <= set(self.simplices[b])

    def label(self, sid: int, names: Sequence[str] | None = None) -> str:
        verts = self.simplices[sid]
        if names is None:
            return "".join(f"v{v}" for v in verts)
        return "".join(names[v] for v in verts)


# -- Alexandrov-topology operators --------------------------------------------

def closure(K: SimplicialComplex, S: Iterable[int]) -> set[int]:
    out: set[int] = set()
    stack = list(S)
    while stack:
        s = stack.pop()
        if s in out:
            continue
        out.add(s)
        stack.extend(K.facets[s])
    return out


def star(K: SimplicialComplex, S: Iterable[int]) -> set[int]:
    """All cofaces (including the simplices themselves) of members of S."""
    out: set[int] = set()
    stack = list(S)
    while stack:
        s = stack.pop()
        if s in out:
            continue
        out.add(s)
        stack.extend(K.cofacets[s])
    return out


def interior(K: SimplicialComplex, S: Iterable[int]) -> set[int]:
    S = set(S)
    return {s for s in S if star(K, [s]) <= S}


def boundary(K: SimplicialComplex, S: Iterable[int]) -> set[int]:
    S = set(S)
    return closure(K, S) - interior(K, S)


def exit_set(K: SimplicialComplex, S: Iterable[int]) -> set[int]:
    S = set(S)
    return closure(K, S) - S


def is_face_convex(K: SimplicialComplex, S: Iterable[int]) -> bool:
    """True iff sigma <= tau <= sigma' with sigma, sigma' in S forces tau in S.

    Equivalent to the exit set being closed, which is what the check uses.
    """
    S = set(S)
    ex = exit_set(K, S)
    return not (closure(K, ex) & S)


class UnionFind:
    def __init__(self, items: Iterable[int] = ()) -> None:
        self.parent: dict[int, int] = {i: i for i in items}

    def add(self, x: int) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted((sorted(g) for g in out.values()), key=lambda g: g[0])


def connected_components(K: SimplicialComplex, S: Iterable[int]) -> list[list[int]]:
    """Partition S under the face relation restricted to S.

    Two members are adjacent when one is a face (of any codimension) of the
    other; blocks are returned sorted by their smallest id.
    """
    S = set(S)
    uf = UnionFind(S)
    for s in S:
        for f in K.faces(s):
            if f in S:
                uf.union(s, f)
    return uf.groups()


# -- indexing maps ------------------------------------------------------------

@dataclass(frozen=True)
class IndexingMap:
    """Injective map K -> R, admissible when faces get smaller values."""

    values: tuple[float, ...]

    def __getitem__(self, sid: int) -> float:
        return self.values[sid]

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def insertion(cls, K: SimplicialComplex) -> "IndexingMap":
        return cls(tuple(float(i) for i in range(len(K))))

    @classmethod
    def checked(cls, K: SimplicialComplex, values: Sequence[float]) -> "IndexingMap":
        I = cls(tuple(float(v) for v in values))
        bad = I.violation(K)
        if bad is not None:
            raise ValueError(f"indexing map is not admissible: {bad}")
        return I

    def violation(self, K: SimplicialComplex) -> tuple[int, int] | str | None:
        """First problem found, or None if injective and admissible."""
        if len(self.values) != len(K):
            return f"expected {len(K)} values, got {len(self.values)}"
        if len(set(self.values)) != len(self.values):
            return "values are not injective"
        for s in range(len(K)):
            for f in K.facets[s]:
                if not self.values[f] < self.values[s]:
                    return (f, s)
        return None


AXES = {"x": 0, "y": 1, "z": 2}


def axis_indexing_map(
    K: SimplicialComplex,
    coords: Mapping[int, Sequence[float]] | Sequence[Sequence[float]],
    axis: str | int = "z",
    direction: str = "+",
) -> IndexingMap:
    """Indexing map increasing (``+``) or decreasing (``-``) along a coordinate axis.

    Vertices are relabelled by the chosen coordinate (ties by vertex id), each
    simplex is keyed by its labels in decreasing order and the keys are ranked
    lexicographically. A face's key is a prefix of, or lexicographically below,
    the key of any coface, hence the map is admissible.
    """
    ax = AXES[axis] if isinstance(axis, str) else int(axis)
    if direction not in ("+", "-"):
        raise ValueError(f"direction must be '+' or '-', got {direction!r}")
    verts = sorted(K.vertex_ids)
    try:
        zs = {v: float(coords[v][ax]) for v in verts}
    except (KeyError, IndexError) as exc:
        raise ValueError(f"missing coordinate for a vertex: {exc}") from None
    sign = 1.0 if direction == "+" else -1.0
    order = sorted(verts, key=lambda v: (sign * zs[v], v))
    label = {v: i for i, v in enumerate(order)}
    keys = [tuple(sorted((label[v] for v in s), reverse=True)) for s in K.simplices]
    ranked = sorted(range(len(K)), key=keys.__getitem__)
    values = [0.0] * len(K)
    for rank, sid in enumerate(ranked):
        values[sid] = float(rank)
    return IndexingMap(tuple(values))
