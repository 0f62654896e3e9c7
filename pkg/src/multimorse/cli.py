"""Command-line front end: ``multimorse <command> mesh.off [options]``."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .complex import IndexingMap, axis_indexing_map
from .field import is_acyclic, is_compatible
from .filtration import AdmissibleFunction, check_admissible, max_extension, projection_map, rips_diameter_map
from .homology import betti_numbers, morse_count_check
from .io import FormatError, VtkAnnotations, analysis_report, read_off, read_vertex_function, write_report, write_vtk
from .mdm import generate_mdm, verify_mdm
from .meshes import Mesh
from .pareto import critical_components, pareto_set

DEFAULT_EPS = 1e-3


class CliError(Exception):
    pass


def _function(mesh: Mesh, args: argparse.Namespace) -> AdmissibleFunction:
    K = mesh.complex
    if getattr(args, "func", None):
        vmap = read_vertex_function(args.func, len(mesh.coords or []) or len(K.vertex_ids))
        return max_extension(K, vmap)
    if getattr(args, "rips", False):
        return rips_diameter_map(K, mesh.coords)
    axes = getattr(args, "axes", None) or "xy"
    if axes == "const0":
        return AdmissibleFunction.constant(K, (0.0,))
    if any(a not in "xyz" for a in axes):
        raise CliError(f"unknown axes {axes!r}")
    return projection_map(K, mesh.coords, axes)


def _index(mesh: Mesh, name: str) -> IndexingMap:
    if name == "insertion":
        return IndexingMap.insertion(mesh.complex)
    if len(name) != 2 or name[0] not in "xyz" or name[1] not in "+-":
        raise CliError(f"unknown indexing map {name!r}")
    return axis_indexing_map(mesh.complex, mesh.coords, name[0], name[1])


def _add_function_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--func", help="CSV file with one row of k values per vertex")
    grp.add_argument("--axes", help="max-extension of coordinate projections: xy, xz, yz, x, ... or const0")
    grp.add_argument("--rips", action="store_true", help="use the Rips diameter map")


def _add_mdm_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--index", default="insertion", help="insertion, x+, x-, y+, y-, z+ or z-")


def _fmt(xs) -> str:
    return " ".join(str(x) for x in xs)


def cmd_generate(args: argparse.Namespace) -> int:
    mesh = read_off(args.mesh)
    K = mesh.complex
    f = _function(mesh, args)
    res = generate_mdm(K, f, _index(mesh, args.index), args.eps)
    V = res.field
    table = morse_count_check(K, V, f, args.ring)
    comps = {rel: len(critical_components(K, res.g, V, f, rel)) for rel in ("g", "gprime", "f")}
    P = pareto_set(K, f, args.ring)
    betti = betti_numbers(K, args.ring)
    print(f"simplices {len(K)}  counts {_fmt(K.counts())}")
    print(f"critical  {_fmt(V.critical_by_dim())}")
    print(f"betti     {_fmt(betti.betti)}")
    print(f"levels    {len(res.levels)}  relative-perfect {table.relative_perfect}")
    print("components " + " ".join(f"{k}={v}" for k, v in comps.items()) + f"  pareto={P.n_components}")
    if args.out:
        block = critical_components(K, res.g, V, f, args.relation).block_of()
        write_vtk(args.out, K, mesh.coords, VtkAnnotations(V, res.g, f, P.simplices, block))
    if args.report:
        rep = analysis_report(K, V, res.levels, betti, res.g, table.relative_perfect, comps, P.n_components)
        write_report(args.report, rep)
    return 0


def cmd_betti(args: argparse.Namespace) -> int:
    mesh = read_off(args.mesh)
    h = betti_numbers(mesh.complex, args.ring)
    print(f"betti {_fmt(h.betti)}")
    if any(h.torsion):
        print("torsion " + " ".join(f"H{p}:{t}" for p, t in enumerate(h.torsion) if t))
    return 0


def cmd_pareto(args: argparse.Namespace) -> int:
    mesh = read_off(args.mesh)
    K = mesh.complex
    f = _function(mesh, args)
    P = pareto_set(K, f, args.ring)
    print(f"pareto simplices {len(P.simplices)}  critical values {len(P.critical_values)}  components {P.n_components}")
    if args.out:
        block = {s: i for i, b in enumerate(P.connected) for s in b}
        write_vtk(args.out, K, mesh.coords, VtkAnnotations(f=f, pareto=P.simplices, component=block))
    if args.report:
        write_report(args.report, {
            "schema": 1,
            "pareto_simplices": len(P.simplices),
            "pareto_components": P.n_components,
            "critical_values": [list(u) for u in P.critical_values],
        })
    return 0


def cmd_components(args: argparse.Namespace) -> int:
    mesh = read_off(args.mesh)
    K = mesh.complex
    f = _function(mesh, args)
    res = generate_mdm(K, f, _index(mesh, args.index), args.eps)
    C = critical_components(K, res.g, res.field, f, args.relation)
    print(f"{C.relation}: {len(C)} components")
    for b in C.blocks:
        print("  " + " ".join(K.label(s) for s in b))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    mesh = read_off(args.mesh)
    K = mesh.complex
    f = _function(mesh, args)
    ok, bad = check_admissible(K, f)
    print(f"admissible {ok}" + ("" if ok else f"  violated by {K.label(bad[0])} < {K.label(bad[1])}"))
    if not ok:
        return 1
    is_mdm, viol = verify_mdm(K, f.values)
    print(f"f is mdm   {is_mdm}" + ("" if is_mdm else f"  ({len(viol)} violations)"))
    res = generate_mdm(K, f, _index(mesh, args.index), args.eps)
    valid, msg = res.field.validate()
    acyclic, _ = is_acyclic(res.field)
    print(f"field valid {valid}  acyclic {acyclic}  f-compatible {is_compatible(res.field, f)}" + (f"  {msg}" if msg else ""))
    return 0 if valid and acyclic else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multimorse", description="Multiparameter discrete Morse analysis of triangle meshes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build an mdm function and its gradient field")
    p.add_argument("mesh")
    _add_function_args(p)
    _add_mdm_args(p)
    p.add_argument("--ring", choices=("z", "z2"), default="z")
    p.add_argument("--relation", choices=("g", "gprime", "f"), default="g", help="component ids written to VTK")
    p.add_argument("--out", help="VTK output path")
    p.add_argument("--report", help="JSON report path")
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("betti", help="Betti numbers of the mesh")
    p.add_argument("mesh")
    p.add_argument("--ring", choices=("z", "z2"), default="z")
    p.set_defaults(run=cmd_betti)

    p = sub.add_parser("pareto", help="discrete Pareto set of the filtering function")
    p.add_argument("mesh")
    _add_function_args(p)
    p.add_argument("--ring", choices=("z", "z2"), default="z")
    p.add_argument("--out")
    p.add_argument("--report")
    p.set_defaults(run=cmd_pareto)

    p = sub.add_parser("components", help="critical components under one relation")
    p.add_argument("mesh")
    _add_function_args(p)
    _add_mdm_args(p)
    p.add_argument("--relation", choices=("g", "gprime", "f"), default="g")
    p.set_defaults(run=cmd_components)

    p = sub.add_parser("check", help="admissibility, mdm test of f, field validation")
    p.add_argument("mesh")
    _add_function_args(p)
    _add_mdm_args(p)
    p.set_defaults(run=cmd_check)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (FormatError, CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
