"""Simplicial (relative) homology over Z and Z2.

Chains live on a face-convex set S of simplices; for the absolute case S is
the whole complex. Boundary terms that leave S (they land in Ex S) are
dropped, which gives the chain complex of the pair (Cl S, Ex S).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .complex import SimplicialComplex, is_face_convex
from .field import DiscreteVectorField
from .filtration import AdmissibleFunction, Value, level_sets

RINGS = ("z", "z2")

Column = dict[int, int]


@dataclass
class BoundaryMatrix:
    """Sparse boundary map C_p -> C_{p-1}; columns are p-simplices, rows (p-1)-simplices."""

    p: int
    rows: list[int]
    cols: list[int]
    columns: list[Column]  # column j as {row position: coefficient}

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out


def chain_basis(K: SimplicialComplex, S: Iterable[int] | None = None) -> list[list[int]]:
    """Simplices of S grouped by dimension, ascending id within each group."""
    members = range(len(K)) if S is None else sorted(set(S))
    out: list[list[int]] = [[] for _ in range(K.dimension + 1)]
    for s in members:
        out[K.dims[s]].append(s)
    while out and not out[-1]:
        out.pop()
    return out


def boundary_matrices(K: SimplicialComplex, S: Iterable[int] | None = None) -> list[BoundaryMatrix]:
    """d_1 .. d_top for the chains on S. Facet i of a sorted simplex carries sign (-1)^i."""
    basis = chain_basis(K, S)
    out = []
    for p in range(1, len(basis)):
        pos = {s: i for i, s in enumerate(basis[p - 1])}
        cols = []
        for s in basis[p]:
            # facets are stored in vertex-removal order, so index == position
            col = {pos[a]: (-1) ** i for i, a in enumerate(K.facets[s]) if a in pos}
            cols.append(col)
        out.append(BoundaryMatrix(p, basis[p - 1], basis[p], cols))
    return out


# -- Smith normal form ----------------------------------------------------------

@dataclass
class SnfResult:
    rank: int
    invariant_factors: list[int] = field(default_factory=list)  # only the entries > 1


class _Sparse:
    """Row- and column-indexed sparse integer matrix supporting elementary operations."""

    def __init__(self, columns: Sequence[Column]) -> None:
        self.cols: dict[int, dict[int, int]] = {}
        self.rows: dict[int, dict[int, int]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    self.cols.setdefault(j, {})[i] = v
                    self.rows.setdefault(i, {})[j] = v

    def _set(self, i: int, j: int, v: int) -> None:
        if v:
            self.cols.setdefault(j, {})[i] = v
            self.rows.setdefault(i, {})[j] = v
        else:
            c = self.cols.get(j)
            if c is not None:
                c.pop(i, None)
                if not c:
                    del self.cols[j]
            r = self.rows.get(i)
            if r is not None:
                r.pop(j, None)
                if not r:
                    del self.rows[i]

    def col_axpy(self, dst: int, src: int, q: int) -> None:
        """column dst -= q * column src"""
        for i, v in list(self.cols.get(src, {}).items()):
            self._set(i, dst, self.cols.get(dst, {}).get(i, 0) - q * v)

    def row_axpy(self, dst: int, src: int, q: int) -> None:
        """row dst -= q * row src"""
        for j, v in list(self.rows.get(src, {}).items()):
            self._set(dst, j, self.rows.get(dst, {}).get(j, 0) - q * v)

    def drop(self, i: int, j: int) -> None:
        for jj in list(self.rows.get(i, {})):
            self._set(i, jj, 0)
        for ii in list(self.cols.get(j, {})):
            self._set(ii, j, 0)


def smith_normal_form(M: Sequence[Column] | Sequence[Sequence[int]]) -> SnfResult:
    """Rank and invariant factors of an integer matrix.

    Accepts either sparse columns ({row: value}) or a dense row-major list.
    Unit pivots are eliminated first without fill in their column; the
    remainder uses minimal-absolute-value pivoting with a divisibility fix-up
    so the returned factors divide one another.
    """
    if M and not isinstance(M[0], dict):
        dense = [list(r) for r in M]  # type: ignore[arg-type]
        ncols = len(dense[0]) if dense else 0
        columns = [{i: dense[i][j] for i in range(len(dense)) if dense[i][j]} for j in range(ncols)]
    else:
        columns = list(M)  # type: ignore[arg-type]
    A = _Sparse(columns)
    rank = 0

    # Phase 1: unit pivots. Clearing the pivot row by column operations leaves
    # the pivot as the only entry of its row; the rest of its column can then
    # be cleared by row operations that touch nothing else.
    for j in sorted(A.cols):
        col = A.cols.get(j)
        if not col:
            continue
        best = None
        for i, v in col.items():
            if v in (1, -1) and (best is None or len(A.rows[i]) < len(A.rows[best])):
                best = i
        if best is None:
            continue
        u = col[best]
        for jj, a in list(A.rows[best].items()):
            if jj != j:
                A.col_axpy(jj, j, a * u)
        A.drop(best, j)
        rank += 1

    # Phase 2: general elimination on what is left (entries without unit pivots).
    diag: list[int] = []
    while A.cols:
        i, j, p = min(
            ((i, j, v) for j, c in A.cols.items() for i, v in c.items()),
            key=lambda t: (abs(t[2]), t[1], t[0]),
        )
        clean = True
        for jj, a in list(A.rows[i].items()):
            if jj != j:
                A.col_axpy(jj, j, a // p)
                if A.rows[i].get(jj):
                    clean = False
        for ii, b in list(A.cols[j].items()):
            if ii != i:
                A.row_axpy(ii, i, b // p)
                if A.cols[j].get(ii):
                    clean = False
        if not clean:
            continue  # a smaller remainder now exists; pick it as the next pivot
        bad = next((ii for c in A.cols.values() for ii, v in c.items() if ii != i and v % p), None)
        if bad is not None:
            A.row_axpy(i, bad, -1)  # row i += row bad
            continue
        A.drop(i, j)
        diag.append(abs(p))
        rank += 1
    factors = sorted(d for d in diag if d > 1)
    return SnfResult(rank, factors)


def invariant_factors_from_diagonal(diag: Iterable[int]) -> list[int]:
    """Normalize any diagonal form to divisibility order (used as an SNF cross-check)."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for a in range(len(d)):
            for b in range(a + 1, len(d)):
                g = gcd(d[a], d[b])
                l = d[a] * d[b] // g
                if (d[a], d[b]) != (g, l):
                    d[a], d[b] = g, l
                    changed = True
    return [x for x in d if x > 1]


# -- Z2 ------------------------------------------------------------------------

def rank_z2(columns: Sequence[Column]) -> int:
    """Rank over Z2; each column becomes a Python int bitset."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        bits = 0
        for i, v in col.items():
            if v & 1:
                bits ^= 1 << i
        while bits:
            top = bits.bit_length() - 1
            other = pivots.get(top)
            if other is None:
                pivots[top] = bits
                rank += 1
                break
            bits ^= other
    return rank


# -- homology ------------------------------------------------------------------

@dataclass
class HomologySummary:
    ring: str
    betti: list[int]
    torsion: list[list[int]]

    def is_zero(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.betti)


def _homology(K: SimplicialComplex, S: Iterable[int] | None, ring: str) -> HomologySummary:
    if ring not in RINGS:
        raise ValueError(f"ring must be one of {RINGS}, got {ring!r}")
    basis = chain_basis(K, S)
    mats = boundary_matrices(K, S)
    ranks = [0] * (len(basis) + 1)  # ranks[p] = rank d_p; d_0 and d_{top+1} are zero
    factors: list[list[int]] = [[] for _ in range(len(basis) + 1)]
    for B in mats:
        if ring == "z2":
            ranks[B.p] = rank_z2(B.columns)
        else:
            res = smith_normal_form(B.columns)
            ranks[B.p] = res.rank
            factors[B.p] = res.invariant_factors
    betti = [len(basis[p]) - ranks[p] - ranks[p + 1] for p in range(len(basis))]
    torsion = [factors[p + 1] for p in range(len(basis))]
    return HomologySummary(ring, betti, torsion)


def betti_numbers(K: SimplicialComplex, ring: str = "z") -> HomologySummary:
    return _homology(K, None, ring)


def relative_homology(K: SimplicialComplex, S: Iterable[int], ring: str = "z") -> HomologySummary:
    """Homology of (Cl S, Ex S), computed on the quotient chains with basis S."""
    S = set(S)
    if not is_face_convex(K, S):
        raise ValueError("relative homology needs a face-convex set (Ex S must be closed)")
    return _homology(K, S, ring)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** p * n for p, n in enumerate(K.counts()))


# -- Morse counts per level ------------------------------------------------------

@dataclass
class LevelCount:
    value: Value
    critical: list[int]  # m_p(u)
    ranks: list[int]  # rank H_p(Cl L_u, Ex L_u)

    @property
    def holds(self) -> bool:
        return all(m >= r for m, r in zip(self.critical, self.ranks))

    @property
    def equal(self) -> bool:
        return self.critical == self.ranks


@dataclass
class MorseCountTable:
    levels: list[LevelCount]

    @property
    def inequalities_hold(self) -> bool:
        return all(L.holds for L in self.levels)

    @property
    def relative_perfect(self) -> bool:
        return all(L.equal for L in self.levels)


def morse_count_check(
    K: SimplicialComplex, V: DiscreteVectorField, f: AdmissibleFunction, ring: str = "z"
) -> MorseCountTable:
    """Compare critical counts with relative Betti numbers level by level."""
    top = K.dimension + 1
    rows = []
    for L in level_sets(K, f):
        m = [0] * top
        for s in L.members:
            if s in V.critical:
                m[K.dims[s]] += 1
        h = relative_homology(K, L.members, ring).betti
        rows.append(LevelCount(L.value, m, h + [0] * (top - len(h))))
    return MorseCountTable(rows)
