"""Multifiltering (admissible) functions and their level-set decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import dist
from typing import Iterator, Mapping, Sequence

from .complex import AXES, SimplicialComplex, star

Value = tuple[float, ...]


@dataclass(frozen=True)
class AdmissibleFunction:
    """Values f(sigma) in R^k indexed by simplex id."""

    values: tuple[Value, ...]

    def __post_init__(self) -> None:
        ks = {len(v) for v in self.values}
        if len(ks) > 1:
            raise ValueError(f"mixed arities {sorted(ks)}")

    @property
    def k(self) -> int:
        return len(self.values[0]) if self.values else 0

    def __getitem__(self, sid: int) -> Value:
        return self.values[sid]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Value]:
        return iter(self.values)

    def component(self, i: int) -> "AdmissibleFunction":
        return AdmissibleFunction(tuple((v[i],) for v in self.values))

    def scaled(self, c: float) -> "AdmissibleFunction":
        return AdmissibleFunction(tuple(tuple(c * x for x in v) for v in self.values))

    @classmethod
    def zip(cls, *parts: "AdmissibleFunction") -> "AdmissibleFunction":
        """Stack scalar (or vector) filtrations into one multifiltration."""
        if len({len(p) for p in parts}) > 1:
            raise ValueError("all parts must live on the same complex")
        return cls(tuple(tuple(x for p in vals for x in p) for vals in zip(*(p.values for p in parts))))

    @classmethod
    def constant(cls, K: SimplicialComplex, value: Sequence[float] = (0.0,)) -> "AdmissibleFunction":
        v = tuple(float(x) for x in value)
        return cls(tuple(v for _ in range(len(K))))


def leq(a: Sequence, b: Sequence) -> bool:
    """Componentwise order on R^k."""
    return all(x <= y for x, y in zip(a, b))


def check_admissible(K: SimplicialComplex, f: AdmissibleFunction) -> tuple[bool, tuple[int, int] | None]:
    """Check f(facet) <= f(sigma) for every facet pair; transitivity covers the rest."""
    if len(f) != len(K):
        raise ValueError(f"function has {len(f)} values for {len(K)} simplices")
    for s in range(len(K)):
        for a in K.facets[s]:
            if not leq(f[a], f[s]):
                return False, (a, s)
    return True, None


def max_extension(
    K: SimplicialComplex, vertex_map: Mapping[int, Sequence[float]] | Sequence[Sequence[float]]
) -> AdmissibleFunction:
    """f_i(sigma) = max over vertices v of sigma of f_i(v)."""
    cache: dict[int, Value] = {}
    out = []
    for s in K.simplices:
        vals = []
        for v in s:
            if v not in cache:
                cache[v] = tuple(float(x) for x in vertex_map[v])
            vals.append(cache[v])
        out.append(tuple(max(c) for c in zip(*vals)))
    return AdmissibleFunction(tuple(out))


def projection_map(
    K: SimplicialComplex, coords: Mapping[int, Sequence[float]] | Sequence[Sequence[float]], axes: str = "xy"
) -> AdmissibleFunction:
    """Max-extension of the projection of the vertices onto the named axes."""
    idx = [AXES[a] for a in axes]
    return max_extension(K, {v: tuple(coords[v][i] for i in idx) for v in K.vertex_ids})


def rips_diameter_map(
    K: SimplicialComplex, coords: Mapping[int, Sequence[float]] | Sequence[Sequence[float]]
) -> AdmissibleFunction:
    """sigma -> largest pairwise vertex distance (0 on vertices)."""
    out = []
    for s in K.simplices:
        try:
            pts = [coords[v] for v in s]
        except (KeyError, IndexError) as exc:
            raise ValueError(f"missing coordinates for vertex {exc}") from None
        out.append((max((dist(p, q) for p, q in combinations(pts, 2)), default=0.0),))
    return AdmissibleFunction(tuple(out))


@dataclass(frozen=True)
class LevelSet:
    value: Value
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


def level_sets(K: SimplicialComplex, f: AdmissibleFunction) -> list[LevelSet]:
    """Fibers of f ordered lexicographically by value.

    Lexicographic order refines the componentwise order, so a level is always
    listed after every level whose value is strictly below it.
    """
    groups: dict[Value, list[int]] = {}
    for sid in range(len(K)):
        groups.setdefault(f[sid], []).append(sid)
    return [LevelSet(u, tuple(groups[u])) for u in sorted(groups)]


def lower_star(K: SimplicialComplex, f: AdmissibleFunction, sid: int) -> set[int]:
    """Cofaces tau >= sigma with f(tau) <= f(sigma)."""
    return {t for t in star(K, [sid]) if leq(f[t], f[sid])}


def level_stats(levels: Sequence[LevelSet]) -> tuple[int, int]:
    """(|f(K)|, lambda = largest level size)."""
    return len(levels), max((len(L) for L in levels), default=0)


__all__ = [
    "AdmissibleFunction",
    "LevelSet",
    "check_admissible",
    "leq",
    "level_sets",
    "level_stats",
    "lower_star",
    "max_extension",
    "projection_map",
    "rips_diameter_map",
]
