"""Discrete (combinatorial) vector fields: validation, V-paths, acyclicity,
compatibility, gradient extraction and the flow-connection test between
critical simplices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .complex import SimplicialComplex, closure


def _coords(value: Any) -> tuple:
    # MdmValue exposes comparable per-coordinate keys; plain tuples are used as is.
    c = getattr(value, "coords", None)
    return c() if callable(c) else tuple(value)


def _leq(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def heads_tails(K: SimplicialComplex, values: Sequence[Any], sid: int) -> tuple[list[int], list[int]]:
    """Head: cofacets tau with g(tau) <= g(sigma). Tail: facets alpha with g(alpha) >= g(sigma)."""
    c = _coords(values[sid])
    head = [t for t in K.cofacets[sid] if _leq(_coords(values[t]), c)]
    tail = [a for a in K.facets[sid] if _leq(c, _coords(values[a]))]
    return head, tail


def validate_field(
    K: SimplicialComplex, pairs: Iterable[tuple[int, int]], critical: Iterable[int]
) -> tuple[bool, str | None]:
    """Check the vector-field axioms on raw (facet, cofacet) pairs and fixed points."""
    seen: dict[int, str] = {}
    for c in critical:
        if c in seen:
            return False, f"simplex {c} listed as critical twice"
        seen[c] = "critical"
    for a, b in pairs:
        if b not in K.cofacets[a]:
            return False, f"{b} is not a cofacet of {a}"
        for s in (a, b):
            if s in seen:
                return False, f"simplex {s} used twice (already {seen[s]})"
        seen[a] = f"paired with {b}"
        seen[b] = f"paired with {a}"
    missing = len(K) - len(seen)
    if missing:
        return False, f"{missing} simplices neither paired nor critical"
    return True, None


@dataclass
class DiscreteVectorField:
    """Partial matching facet -> cofacet plus the fixed (critical) simplices."""

    complex: SimplicialComplex
    pairs: dict[int, int] = field(default_factory=dict)
    critical: set[int] = field(default_factory=set)

    def __post_init__(self) -> None:
        self._down = {b: a for a, b in self.pairs.items()}

    def partner(self, sid: int) -> int | None:
        if sid in self.pairs:
            return self.pairs[sid]
        return self._down.get(sid)

    def __call__(self, sid: int) -> int | None:
        """V(sigma): itself if critical, its cofacet if paired upward, else None."""
        if sid in self.critical:
            return sid
        return self.pairs.get(sid)

    def critical_by_dim(self) -> list[int]:
        K = self.complex
        out = [0] * (K.dimension + 1)
        for c in self.critical:
            out[K.dims[c]] += 1
        return out

    def validate(self) -> tuple[bool, str | None]:
        return validate_field(self.complex, self.pairs.items(), self.critical)

    def same_as(self, other: "DiscreteVectorField") -> bool:
        return self.pairs == other.pairs and self.critical == other.critical


def is_acyclic(V: DiscreteVectorField) -> tuple[bool, list[int] | None]:
    """Detect a closed nontrivial V-path.

    Arcs go sigma -> sigma' for every facet sigma' != sigma of V(sigma); only
    upward-paired simplices have outgoing arcs. Returns a witness path
    sigma_0, tau_0, sigma_1, ..., sigma_0 when a loop exists.
    """
    K = V.complex
    pairs = V.pairs
    color: dict[int, int] = {}
    for root in pairs:
        if root in color:
            continue
        color[root] = 1
        path = [root]
        stack = [iter([f for f in K.facets[pairs[root]] if f != root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                color[path.pop()] = 2
                stack.pop()
                continue
            if nxt not in pairs:
                continue
            state = color.get(nxt, 0)
            if state == 1:
                loop = path[path.index(nxt):] + [nxt]
                witness = []
                for s in loop[:-1]:
                    witness += [s, pairs[s]]
                return False, witness + [nxt]
            if state == 0:
                color[nxt] = 1
                path.append(nxt)
                stack.append(iter([f for f in K.facets[pairs[nxt]] if f != nxt]))
    return True, None


def is_compatible(V: DiscreteVectorField, f: Sequence[Any]) -> bool:
    """Every pair stays inside one level set of f."""
    return all(f[a] == f[b] for a, b in V.pairs.items())


def gradient_of(K: SimplicialComplex, g: Sequence[Any]) -> DiscreteVectorField:
    """Gradient field of an mdm function given by its values per simplex."""
    pairs: dict[int, int] = {}
    critical: set[int] = set()
    for s in range(len(K)):
        head, tail = heads_tails(K, g, s)
        if len(head) > 1 or len(tail) > 1 or (head and tail):
            raise ValueError(f"not an mdm function at simplex {s}: head={head} tail={tail}")
        if head:
            pairs[s] = head[0]
        elif not tail:
            critical.add(s)
    return DiscreteVectorField(K, pairs, critical)


def flow_reach(V: DiscreteVectorField, sid: int) -> set[int]:
    """Everything lying on a V-path that starts at some face of sigma."""
    K = V.complex
    start = closure(K, [sid])
    seen = set(start)
    todo = deque(start)
    while todo:
        a = todo.popleft()
        b = V.pairs.get(a)
        if b is None:
            continue
        seen.add(b)
        for a2 in K.facets[b]:
            if a2 != a and a2 not in seen:
                seen.add(a2)
                todo.append(a2)
    return seen


def flows_to(V: DiscreteVectorField, sigma: int, tau: int) -> bool:
    """sigma >= tau, or a V-path from a face of sigma reaches a coface of tau."""
    K = V.complex
    target = set(K.simplices[tau])
    return any(target <= set(K.simplices[s]) for s in flow_reach(V, sigma))


def connection(V: DiscreteVectorField, sigma: int, tau: int) -> bool:
    """Symmetric flow connection between two simplices (either direction)."""
    return flows_to(V, sigma, tau) or flows_to(V, tau, sigma)


def v_paths(V: DiscreteVectorField, start: int, max_len: int | None = None) -> Iterable[list[int]]:
    """Enumerate V-paths sigma_0, tau_0, sigma_1, ... from ``start`` (brute force)."""
    K = V.complex
    limit = max_len if max_len is not None else len(K)

    def rec(path: list[int]) -> Iterable[list[int]]:
        yield path
        s = path[-1]
        t = V.pairs.get(s)
        if t is None or len(path) // 2 >= limit:
            return
        for s2 in K.facets[t]:
            if s2 != s:
                yield from rec(path + [t, s2])

    yield from rec([start])
