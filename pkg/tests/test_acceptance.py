"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run ``python3 tests/test_acceptance.py`` for the summary alone, or
``pytest -s tests/test_acceptance.py`` to see the lines inside pytest.
"""
from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import random_complex, random_vertex_map  # noqa: E402
from multimorse.complex import SimplicialComplex, axis_indexing_map  # noqa: E402
from multimorse.field import DiscreteVectorField, gradient_of, is_acyclic, is_compatible  # noqa: E402
from multimorse.filtration import AdmissibleFunction, max_extension, projection_map  # noqa: E402
from multimorse.homology import betti_numbers, morse_count_check  # noqa: E402
from multimorse.mdm import generate_mdm, verify_mdm  # noqa: E402
from multimorse.meshes import (  # noqa: E402
    circle,
    dunce_hat,
    klein_bottle9,
    labeled_square,
    octahedron,
    octasphere,
    projective_plane6,
    tetrahedron_boundary,
    torus,
    torus7,
)
from multimorse.pareto import critical_components, pareto_set  # noqa: E402
from oracles import betti_gf2_dense, has_closed_vpath  # noqa: E402

# Mesh sizes used for the Pareto and component counts (see README).
TORUS_GRID = (16, 12)
SPHERE_LEVEL = 4


def report(n: int, title: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title} -- {detail}")


# 1 ---------------------------------------------------------------------------

def check_square() -> tuple[bool, str]:
    t0 = time.perf_counter()
    K, f, names = labeled_square()
    res = generate_mdm(K, f, epsilon=0.5)
    lab = lambda s: K.label(s, names)  # noqa: E731
    pairs = {(lab(a), lab(b)) for a, b in res.field.pairs.items()}
    crit = {lab(s) for s in res.field.critical}
    bumps = {lab(s): v.bump for s, v in enumerate(res.g.values) if v.bump}
    d = Fraction(1, 22)
    expected_real = {
        "AB": (1 + d, 2), "CA": (1, 2), "BD": (2, 1), "CD": (2 + d, 1),
        "AD": (2 + d, 2), "CAD": (2 + d, 2), "ABD": (2 + 2 * d, 2),
        "A": (1, 2), "B": (0, 0), "C": (0, 0), "D": (2, 1),
    }
    real_ok = all(res.g.realized_exact(s) == expected_real[lab(s)] for s in range(len(K)))
    elapsed = time.perf_counter() - t0
    ok = (
        pairs == {("A", "CA"), ("D", "BD"), ("AD", "CAD")}
        and crit == {"B", "C", "AB", "CD", "ABD"}
        and bumps == {"AB": 1, "CD": 1, "AD": 1, "CAD": 1, "ABD": 2}
        and res.g.delta_exact == d
        and real_ok
        and elapsed < 1.0
    )
    return ok, f"pairs={sorted(pairs)} critical={sorted(crit)} bumps={bumps} delta={res.g.delta_exact} t={elapsed:.3f}s (<1s)"


def test_criterion_01_square_golden():
    ok, detail = check_square()
    report(1, "worked square reproduces g, V, critical set", ok, detail)
    assert ok, detail


# 2 ---------------------------------------------------------------------------

def _random_input(rng: random.Random):
    while True:
        K = random_complex(rng, rng.randint(4, 40), rng.randint(0, 60), rng.randint(0, 15))
        if len(K) <= 300:
            break
    k = rng.choice([1, 2, 3])
    levels = rng.choice([None, None, 2, 3, 6])
    f = max_extension(K, random_vertex_map(rng, K, k, levels))
    eps = 1.0 - rng.random()  # (0, 1]
    return K, f, eps


def check_random_suite(n: int = 500, seed: int = 20240611) -> tuple[bool, str]:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    failures = []
    sizes = []
    for i in range(n):
        K, f, eps = _random_input(rng)
        sizes.append(len(K))
        res = generate_mdm(K, f, epsilon=eps)
        g, V = res.g, res.field
        real_dev = max(
            (max(abs(a - b) for a, b in zip(g.realized(s), f[s])) for s in range(len(K))), default=0.0
        )
        ok = (
            verify_mdm(K, g.values)[0]
            and gradient_of(K, g.values).same_as(V)
            and is_compatible(V, f)
            and is_acyclic(V)[0]
            and g.max_deviation() < eps
            and real_dev < eps
        )
        if not ok:
            failures.append(i)
    elapsed = time.perf_counter() - t0
    good = not failures and elapsed < 60
    return good, f"{n} inputs, |K| in [{min(sizes)}, {max(sizes)}], failures={failures[:5]} t={elapsed:.1f}s (<60s)"


def test_criterion_02_random_suite():
    ok, detail = check_random_suite()
    report(2, "generated g is mdm, f-compatible, acyclic, eps-close", ok, detail)
    assert ok, detail


# 3 ---------------------------------------------------------------------------

CIRCLE_ARROWS = {((3,), (3, 4)), ((4,), (4, 5)), ((5,), (5, 6)), ((0,), (0, 11)), ((11,), (10, 11)), ((10,), (9, 10))}


def check_circle_fixed_point() -> tuple[bool, str]:
    M = circle()
    K = M.complex
    f = projection_map(K, M.coords, "xy")
    is_mdm = verify_mdm(K, f.values)[0]
    res = generate_mdm(K, f)
    same = all(v.bump == 0 and v.base == f[s] for s, v in enumerate(res.g.values))
    arrows = {(K.simplices[a], K.simplices[b]) for a, b in res.field.pairs.items()}
    ok = is_mdm and same and arrows == CIRCLE_ARROWS and res.field.critical_by_dim() == [6, 6]
    return ok, f"f mdm={is_mdm}, g==f={same}, arrows match={arrows == CIRCLE_ARROWS}, critical by dim={res.field.critical_by_dim()}"


def test_criterion_03_circle_fixed_point():
    ok, detail = check_circle_fixed_point()
    report(3, "mdm input is returned unchanged", ok, detail)
    assert ok, detail


# 4 ---------------------------------------------------------------------------

def check_circle_relative_perfect() -> tuple[bool, str]:
    M = circle()
    K = M.complex
    f = projection_map(K, M.coords, "xy")
    table = morse_count_check(K, generate_mdm(K, f).field, f)
    bad = [L.value for L in table.levels if not L.equal]
    return table.relative_perfect, f"{len(table.levels)} levels, unequal levels={bad}"


def test_criterion_04_circle_relative_perfect():
    ok, detail = check_circle_relative_perfect()
    report(4, "circle field is relative-perfect", ok, detail)
    assert ok, detail


# 5 ---------------------------------------------------------------------------

def check_betti_fixtures() -> tuple[bool, str]:
    t0 = time.perf_counter()
    got = {
        "sphere/Z": betti_numbers(octahedron().complex, "z").betti,
        "torus/Z": betti_numbers(torus7().complex, "z").betti,
        "klein/Z2": betti_numbers(klein_bottle9().complex, "z2").betti,
        "rp2/Z2": betti_numbers(projective_plane6().complex, "z2").betti,
    }
    kz = betti_numbers(klein_bottle9().complex, "z")
    want = {"sphere/Z": [1, 0, 1], "torus/Z": [1, 2, 1], "klein/Z2": [1, 2, 1], "rp2/Z2": [1, 1, 1]}
    elapsed = time.perf_counter() - t0
    ok = got == want and kz.torsion[1] == [2] and kz.betti == [1, 1, 0] and elapsed < 5
    return ok, f"{got}, klein/Z betti={kz.betti} torsion H1={kz.torsion[1]} t={elapsed:.2f}s (<5s)"


def test_criterion_05_betti_fixtures():
    ok, detail = check_betti_fixtures()
    report(5, "Betti numbers of standard surfaces", ok, detail)
    assert ok, detail


# 6 ---------------------------------------------------------------------------

def _critical_counts_all_maps(mesh):
    K = mesh.complex
    f = AdmissibleFunction.constant(K, (0.0,))
    out = {"insertion": generate_mdm(K, f).field.critical_by_dim()}
    if mesh.coords is not None:
        for ax in "xyz":
            for d in "+-":
                out[ax + d] = generate_mdm(K, f, axis_indexing_map(K, mesh.coords, ax, d)).field.critical_by_dim()
    return out


def check_optimality() -> tuple[bool, str]:
    fixtures = {
        "tetrahedron": (tetrahedron_boundary(), "z2"),
        "sphere": (octasphere(3), "z2"),
        "torus7": (torus7(), "z2"),
        "torus": (torus(8, 6), "z2"),
        "klein": (klein_bottle9(), "z2"),
        "rp2": (projective_plane6(), "z2"),
        "dunce": (dunce_hat(), "z"),
    }
    ok = True
    parts = []
    for name, (mesh, ring) in fixtures.items():
        beta = betti_numbers(mesh.complex, ring).betti
        runs = _critical_counts_all_maps(mesh)
        ineq = all(all(m >= b for m, b in zip(ms, beta)) for ms in runs.values())
        perfect = [k for k, ms in runs.items() if ms == beta]
        ok &= ineq
        if name in ("tetrahedron", "sphere", "torus7", "torus"):
            ok &= bool(perfect)
        if name == "dunce":
            ok &= runs["insertion"] == [1, 1, 1] and beta == [1, 0, 0]
            parts.append(f"dunce m={runs['insertion']} beta={beta}")
        else:
            parts.append(f"{name} beta={beta} perfect under {perfect[:2] or 'none'}")
    return ok, "; ".join(parts)


def test_criterion_06_morse_inequalities_and_optimality():
    ok, detail = check_optimality()
    report(6, "m_p >= beta_p, perfect fields found, dunce hat (1,1,1)", ok, detail)
    assert ok, detail


# 7 ---------------------------------------------------------------------------

def check_pareto_counts() -> tuple[bool, str]:
    t0 = time.perf_counter()
    T = torus(*TORUS_GRID)
    S = octasphere(SPHERE_LEVEL)
    nt = pareto_set(T.complex, projection_map(T.complex, T.coords, "xy")).n_components
    ns = pareto_set(S.complex, projection_map(S.complex, S.coords, "xy")).n_components
    elapsed = time.perf_counter() - t0
    ok = nt == 4 and ns == 2 and elapsed < 10
    return ok, f"torus {TORUS_GRID} -> {nt} (want 4), sphere level {SPHERE_LEVEL} -> {ns} (want 2), t={elapsed:.2f}s (<10s)"


def test_criterion_07_pareto_components():
    ok, detail = check_pareto_counts()
    report(7, "Pareto component counts on torus and sphere", ok, detail)
    assert ok, detail


# 8 ---------------------------------------------------------------------------

def check_component_relations() -> tuple[bool, str]:
    K, f, _ = labeled_square()
    res = generate_mdm(K, f, epsilon=0.5)
    sq_g = len(critical_components(K, res.g, res.field, f, "g"))
    sq_gp = len(critical_components(K, res.g, res.field, f, "gprime"))
    T = torus(*TORUS_GRID)
    KT = T.complex
    fT = projection_map(KT, T.coords, "xy")
    rT = generate_mdm(KT, fT)
    t_gp = len(critical_components(KT, rT.g, rT.field, fT, "gprime"))
    t_f = len(critical_components(KT, rT.g, rT.field, fT, "f"))
    ok = (sq_g, sq_gp, t_gp, t_f) == (4, 3, 3, 4)
    return ok, f"square sim_g={sq_g} (4) sim_g'={sq_gp} (3); torus sim_g'={t_gp} (3) sim_f={t_f} (4)"


def test_criterion_08_component_relations():
    ok, detail = check_component_relations()
    report(8, "critical components under the three relations", ok, detail)
    assert ok, detail


# 9 ---------------------------------------------------------------------------

def check_oracles(seed: int = 99) -> tuple[bool, str]:
    rng = random.Random(seed)
    homology_cases = disagreements = 0
    while homology_cases < 200:
        K = random_complex(rng, rng.randint(3, 14), rng.randint(0, 30), rng.randint(0, 8))
        if len(K) > 200:
            continue
        hz = betti_numbers(K, "z")
        if any(hz.torsion):
            continue
        homology_cases += 1
        if hz.betti != betti_gf2_dense(K) or betti_numbers(K, "z2").betti != hz.betti:
            disagreements += 1
    field_cases = field_bad = cyclic = 0
    while field_cases < 200:
        K = random_complex(rng, rng.randint(3, 7), rng.randint(1, 6), rng.randint(0, 3))
        if len(K) > 50:
            continue
        field_cases += 1
        order = list(range(len(K)))
        rng.shuffle(order)
        used, pairs = set(), {}
        for s in order:
            if s in used:
                continue
            cof = [t for t in K.cofacets[s] if t not in used]
            if cof and rng.random() < 0.8:
                t = rng.choice(cof)
                pairs[s] = t
                used |= {s, t}
        V = DiscreteVectorField(K, pairs, set(range(len(K))) - used)
        brute = not has_closed_vpath(V)
        cyclic += not brute
        if is_acyclic(V)[0] != brute:
            field_bad += 1
    ok = disagreements == 0 and field_bad == 0
    return ok, (
        f"homology: {homology_cases} torsion-free complexes, {disagreements} disagreements; "
        f"acyclicity: {field_cases} matchings ({cyclic} cyclic), {field_bad} disagreements"
    )


def test_criterion_09_oracle_cross_checks():
    ok, detail = check_oracles()
    report(9, "SNF vs Z2 elimination, DFS vs V-path enumeration", ok, detail)
    assert ok, detail


# 10 --------------------------------------------------------------------------

def check_complexity(seed: int = 5) -> tuple[bool, str]:
    import numpy as np

    rng = random.Random(seed)
    sizes, times, lams = [], [], []
    for n in (13, 20, 32, 50, 80, 128):
        M = torus(n, n)
        K = M.complex
        f = max_extension(K, {v: (rng.random(), rng.random()) for v in range(len(M.coords))})
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            res = generate_mdm(K, f, check=False)
            best = min(best, time.perf_counter() - t0)
        sizes.append(len(K))
        times.append(best)
        lams.append(max(len(L) for L in res.levels))
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    ok = slope <= 1.3
    return ok, f"|K| {sizes[0]}..{sizes[-1]}, lambda<={max(lams)}, log-log slope={slope:.2f} (<=1.3)"


def test_criterion_10_complexity():
    ok, detail = check_complexity()
    report(10, "near-linearithmic scaling", ok, detail)
    assert ok, detail


if __name__ == "__main__":
    checks = [
        (1, "worked square", check_square),
        (2, "randomized generator suite", check_random_suite),
        (3, "circle fixed point", check_circle_fixed_point),
        (4, "circle relative-perfect", check_circle_relative_perfect),
        (5, "Betti fixtures", check_betti_fixtures),
        (6, "Morse inequalities / optimality", check_optimality),
        (7, "Pareto components", check_pareto_counts),
        (8, "component relations", check_component_relations),
        (9, "oracle cross-checks", check_oracles),
        (10, "complexity", check_complexity),
    ]
    failed = 0
    for n, title, fn in checks:
        ok, detail = fn()
        failed += not ok
        report(n, title, ok, detail)
    sys.exit(1 if failed else 0)
