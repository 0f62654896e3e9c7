"""Generation of multiparameter discrete Morse (mdm) functions.

The perturbed function g is kept symbolic: every value is the f-value of the
simplex plus an integer number of delta-bumps on the first coordinate. Because
delta is at most 1/|K| of the smallest gap between distinct first coordinates
and a bump count never reaches |K|, comparing (f_1, bump) lexicographically is
exactly the comparison of the realized reals, so no floating-point collision
can change the result.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .complex import IndexingMap, SimplicialComplex
from .field import DiscreteVectorField, heads_tails, _coords, _leq
from .filtration import AdmissibleFunction, LevelSet, Value, check_admissible, level_sets


@dataclass(frozen=True)
class MdmValue:
    """(base_1 + bump * delta, base_2, ..., base_k)."""

    base: Value
    bump: int = 0

    def coords(self) -> tuple:
        return ((self.base[0], self.bump),) + tuple(self.base[1:])

    def realize(self, delta: float) -> Value:
        return (self.base[0] + self.bump * delta,) + tuple(self.base[1:])

    def realize_exact(self, delta: Fraction) -> tuple[Fraction, ...]:
        return (Fraction(self.base[0]) + self.bump * delta,) + tuple(Fraction(x) for x in self.base[1:])

    def __le__(self, other: "MdmValue") -> bool:
        return _leq(self.coords(), other.coords())


@dataclass
class MdmFunction:
    values: list[MdmValue]
    delta: float
    epsilon: float
    delta_exact: Fraction

    def __getitem__(self, sid: int) -> MdmValue:
        return self.values[sid]

    def __len__(self) -> int:
        return len(self.values)

    def realized(self, sid: int) -> Value:
        return self.values[sid].realize(self.delta)

    def realized_exact(self, sid: int) -> tuple[Fraction, ...]:
        return self.values[sid].realize_exact(self.delta_exact)

    def max_deviation(self) -> Fraction:
        """max over sigma of |g(sigma) - f(sigma)| in the sup norm, exactly."""
        return max((v.bump * self.delta_exact for v in self.values), default=Fraction(0))


PAIRED_WITH_FACET = "paired-with-facet"
PAIRED_WITH_COFACET = "paired-with-cofacet"
CRITICAL = "critical"


@dataclass
class GenerationTrace:
    """Processing order; a pair shares one step number."""

    order: list[tuple[int, str, int]] = field(default_factory=list)  # (simplex, role, step)
    levels: list[tuple[Value, int, int]] = field(default_factory=list)  # (u, |L_u|, critical count)
    step: int = 0

    def record(self, sid: int, role: str) -> None:
        self.order.append((sid, role, self.step))

    def advance(self) -> None:
        self.step += 1


@dataclass
class MdmResult:
    g: MdmFunction
    field: DiscreteVectorField
    trace: GenerationTrace
    levels: list[LevelSet]


def compute_delta(K: SimplicialComplex, f: AdmissibleFunction, epsilon: float, exact: bool = False):
    """delta = min(eps, eps') / |K|, eps' the smallest gap between distinct f_1 values."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n = len(K)
    if n == 0:
        raise ValueError("empty complex")
    firsts = sorted({Fraction(v[0]) for v in f})
    bound = Fraction(epsilon)
    if len(firsts) > 1:
        bound = min(bound, min(b - a for a, b in zip(firsts, firsts[1:])))
    d = bound / n
    return d if exact else float(d)


def compute_g(
    K: SimplicialComplex,
    f: AdmissibleFunction,
    g: Sequence[MdmValue | None],
    sid: int,
    tau: int | None = None,
) -> MdmValue:
    """Value shared by sigma (and its paired facet tau when given)."""
    base = f[sid]
    if K.dims[sid] == 0:
        return MdmValue(base, 0)
    others = []
    for a in K.facets[sid]:
        if a == tau:
            continue
        ga = g[a]
        if ga is None:
            raise ValueError(f"facet {a} of {sid} has no value yet")
        others.append(ga)
    top = (base[0], 0)
    for ga in others:
        key = (ga.base[0], ga.bump)
        if key > top:
            top = key
    # top[0] is always f_1(sigma): a facet with smaller f_1 stays below it.
    w = MdmValue((top[0],) + tuple(base[1:]), top[1])
    if any(w == ga for ga in others):
        w = MdmValue(w.base, w.bump + 1)
    return w


def expand_mdm(
    K: SimplicialComplex,
    f: AdmissibleFunction,
    g: list[MdmValue | None],
    pairs: dict[int, int],
    critical: set[int],
    level: Sequence[int],
    index: IndexingMap,
    trace: GenerationTrace | None = None,
) -> None:
    """Extend g and the field over one level set, in place."""
    members = set(level)
    unproc = {s: sum(1 for a in K.facets[s] if a in members) for s in level}
    processed: set[int] = set()
    queued_one: set[int] = set()
    pq_zero: list[tuple[float, int]] = []
    pq_one: list[tuple[float, int]] = []
    for s in level:
        if unproc[s] == 0:
            heapq.heappush(pq_zero, (index[s], s))
        elif unproc[s] == 1:
            heapq.heappush(pq_one, (index[s], s))
            queued_one.add(s)

    def mark(s: int) -> None:
        processed.add(s)
        for b in K.cofacets[s]:
            if b in members:
                unproc[b] -= 1

    def add_cofacets(s: int) -> None:
        for b in K.cofacets[s]:
            if b in members and b not in processed and b not in queued_one and unproc[b] == 1:
                heapq.heappush(pq_one, (index[b], b))
                queued_one.add(b)

    while pq_one or pq_zero:
        while pq_one:
            _, s = heapq.heappop(pq_one)
            if unproc[s] == 0:
                heapq.heappush(pq_zero, (index[s], s))
                continue
            t = next(a for a in K.facets[s] if a in members and a not in processed)
            w = compute_g(K, f, g, s, t)
            g[s] = g[t] = w
            pairs[t] = s
            mark(t)
            mark(s)
            if trace is not None:
                trace.record(t, PAIRED_WITH_COFACET)
                trace.record(s, PAIRED_WITH_FACET)
                trace.advance()
            add_cofacets(s)
            add_cofacets(t)
        if pq_zero:
            _, s = heapq.heappop(pq_zero)
            if s not in processed:
                g[s] = compute_g(K, f, g, s)
                critical.add(s)
                mark(s)
                if trace is not None:
                    trace.record(s, CRITICAL)
                    trace.advance()
                add_cofacets(s)


def generate_mdm(
    K: SimplicialComplex,
    f: AdmissibleFunction,
    index: IndexingMap | None = None,
    epsilon: float = 1e-3,
    check: bool = True,
) -> MdmResult:
    """Build an f-compatible mdm function g with |g - f| < epsilon and its gradient field."""
    if index is None:
        index = IndexingMap.insertion(K)
    if check:
        ok, bad = check_admissible(K, f)
        if not ok:
            raise ValueError(f"f is not admissible: f({bad[0]}) !<= f({bad[1]})")
        problem = index.violation(K)
        if problem is not None:
            raise ValueError(f"indexing map is not admissible: {problem}")
    trace = GenerationTrace()
    levels = level_sets(K, f)
    if len(K) == 0:
        return MdmResult(MdmFunction([], 0.0, epsilon, Fraction(0)), DiscreteVectorField(K), trace, levels)
    delta = compute_delta(K, f, epsilon, exact=True)
    g: list[MdmValue | None] = [None] * len(K)
    pairs: dict[int, int] = {}
    critical: set[int] = set()
    for L in levels:
        before = len(critical)
        expand_mdm(K, f, g, pairs, critical, L.members, index, trace)
        trace.levels.append((L.value, len(L), len(critical) - before))
    gf = MdmFunction(g, float(delta), float(epsilon), delta)  # type: ignore[arg-type]
    return MdmResult(gf, DiscreteVectorField(K, pairs, critical), trace, levels)


@dataclass
class MdmViolation:
    simplex: int
    neighbor: int | None
    condition: int


def verify_mdm(K: SimplicialComplex, g: Sequence) -> tuple[bool, list[MdmViolation]]:
    """Check the four head/tail conditions on every simplex.

    ``g`` may hold MdmValue objects or plain value tuples (to test whether an
    input function is already mdm).
    """
    out: list[MdmViolation] = []
    for s in range(len(K)):
        c = _coords(g[s])
        head, tail = heads_tails(K, g, s)
        if len(head) > 1:
            out += [MdmViolation(s, t, 1) for t in head]
        if len(tail) > 1:
            out += [MdmViolation(s, a, 2) for a in tail]
        for t in K.cofacets[s]:
            ct = _coords(g[t])
            if not (_leq(ct, c) or (_leq(c, ct) and ct != c)):
                out.append(MdmViolation(s, t, 3))
        for a in K.facets[s]:
            ca = _coords(g[a])
            if not (_leq(c, ca) or (_leq(ca, c) and ca != c)):
                out.append(MdmViolation(s, a, 4))
    return not out, out


def critical_simplices(K: SimplicialComplex, g: Sequence) -> set[int]:
    out = set()
    for s in range(len(K)):
        head, tail = heads_tails(K, g, s)
        if not head and not tail:
            out.add(s)
    return out
