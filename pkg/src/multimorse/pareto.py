"""Discrete Pareto sets and critical components of an mdm function."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .complex import SimplicialComplex, UnionFind, closure, connected_components, star
from .field import DiscreteVectorField, _coords, flow_reach
from .filtration import AdmissibleFunction, LevelSet, Value, level_sets, lower_star
from .homology import HomologySummary, relative_homology


@dataclass
class LevelComponent:
    value: Value
    members: list[int]
    homology: HomologySummary

    @property
    def critical(self) -> bool:
        return not self.homology.is_zero()


@dataclass
class ParetoSet:
    critical_values: list[Value]
    simplices: set[int]
    components: list[LevelComponent]  # every level component, critical or not
    connected: list[list[int]] = field(default_factory=list)  # blocks of the Pareto set itself

    @property
    def n_components(self) -> int:
        return len(self.connected)


def pareto_set(K: SimplicialComplex, f: AdmissibleFunction, ring: str = "z") -> ParetoSet:
    values: list[Value] = []
    simplices: set[int] = set()
    comps: list[LevelComponent] = []
    for L in level_sets(K, f):
        parts = connected_components(K, L.members)
        any_part = False
        for part in parts:
            c = LevelComponent(L.value, part, relative_homology(K, part, ring))
            comps.append(c)
            if c.critical:
                simplices.update(part)
                any_part = True
        if len(parts) == 1:
            level_nonzero = any_part
        else:
            level_nonzero = not relative_homology(K, L.members, ring).is_zero()
        if level_nonzero:
            values.append(L.value)
    return ParetoSet(values, simplices, comps, connected_components(K, simplices))


def primary_simplex(K: SimplicialComplex, f: AdmissibleFunction, level: LevelSet | Sequence[int]) -> int | None:
    """The sigma in the level whose lower star is the whole level, if any."""
    members = set(level.members if isinstance(level, LevelSet) else level)
    for s in sorted(members, key=lambda s: K.dims[s]):
        if lower_star(K, f, s) == members:
            return s
    return None


RELATIONS = {"g": "sim_g", "gprime": "sim_g_prime", "f": "sim_f"}


@dataclass
class CriticalComponents:
    relation: str
    blocks: list[list[int]]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {s: i for i, b in enumerate(self.blocks) for s in b}


def _normalize(relation: str) -> str:
    for short, tag in RELATIONS.items():
        if relation in (short, tag):
            return tag
    raise ValueError(f"unknown relation {relation!r}; expected one of {sorted(RELATIONS)}")


def _pairs_sharing_a_coordinate(crit: list[int], coords: dict[int, tuple]) -> set[tuple[int, int]]:
    buckets: dict[tuple[int, object], list[int]] = defaultdict(list)
    for s in crit:
        for i, c in enumerate(coords[s]):
            buckets[(i, c)].append(s)
    out = set()
    for group in buckets.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                out.add((group[a], group[b]))
    return out


def critical_components(
    K: SimplicialComplex,
    g: Sequence,
    V: DiscreteVectorField,
    f: AdmissibleFunction | None = None,
    relation: str = "g",
) -> CriticalComponents:
    """Classes of the transitive closure of one of the three base relations."""
    tag = _normalize(relation)
    if tag != "sim_g" and f is None:
        raise ValueError(f"relation {tag} needs the filtering function f")
    crit = sorted(V.critical)
    source = g if tag == "sim_g" else f
    coords = {s: _coords(source[s]) for s in crit}
    candidates = _pairs_sharing_a_coordinate(crit, coords)
    uf = UnionFind(crit)

    if tag in ("sim_g", "sim_g_prime"):
        crit_set = set(crit)
        below: dict[int, set[int]] = {}
        for s in crit:
            below[s] = closure(K, flow_reach(V, s)) & crit_set
        for a, b in candidates:
            if b in below[a] or a in below[b]:
                uf.union(a, b)
    else:
        assert f is not None
        comp_of: dict[int, int] = {}
        comp_members: list[set[int]] = []
        for L in level_sets(K, f):
            if not any(s in V.critical for s in L.members):
                continue
            for part in connected_components(K, L.members):
                if any(s in V.critical for s in part):
                    for s in part:
                        comp_of[s] = len(comp_members)
                    comp_members.append(set(part))
        reach: dict[int, set[int]] = {}

        def neighborhood(c: int) -> set[int]:
            if c not in reach:
                m = comp_members[c]
                reach[c] = closure(K, m) | star(K, m)
            return reach[c]

        for a, b in candidates:
            ca, cb = comp_of[a], comp_of[b]
            if ca == cb or neighborhood(ca) & comp_members[cb]:
                uf.union(a, b)
    return CriticalComponents(tag, uf.groups())
