"""File formats: OFF meshes in, CSV vertex functions in, legacy VTK and JSON out."""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .complex import SimplicialComplex
from .field import DiscreteVectorField
from .filtration import AdmissibleFunction, LevelSet, level_stats
from .homology import HomologySummary
from .mdm import MdmFunction
from .meshes import Mesh

REPORT_SCHEMA = 1


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def read_off(path: str | Path) -> Mesh:
    """ASCII OFF with triangle faces; triangle closures are inserted in file order."""
    lines = _content_lines(Path(path).read_text())
    try:
        n, head = next(lines)
    except StopIteration:
        raise FormatError(f"{path}: empty file") from None
    tokens = head.split()
    if tokens[0] != "OFF":
        raise FormatError(f"{path}:{n}: expected 'OFF' header, got {tokens[0]!r}")
    rest = tokens[1:]
    if not rest:
        try:
            n, line = next(lines)
        except StopIteration:
            raise FormatError(f"{path}: missing counts line") from None
        rest = line.split()
    try:
        nv, nf = int(rest[0]), int(rest[1])
    except (IndexError, ValueError):
        raise FormatError(f"{path}:{n}: bad counts line {' '.join(rest)!r}") from None
    coords = []
    for _ in range(nv):
        try:
            n, line = next(lines)
        except StopIteration:
            raise FormatError(f"{path}: expected {nv} vertices, file ended after {len(coords)}") from None
        parts = line.split()
        try:
            xyz = tuple(float(x) for x in parts[:3])
        except ValueError:
            raise FormatError(f"{path}:{n}: non-numeric coordinate in {line!r}") from None
        if len(xyz) != 3:
            raise FormatError(f"{path}:{n}: vertex needs 3 coordinates")
        coords.append(xyz)
    faces = []
    for _ in range(nf):
        try:
            n, line = next(lines)
        except StopIteration:
            raise FormatError(f"{path}: expected {nf} faces, file ended after {len(faces)}") from None
        try:
            parts = [int(x) for x in line.split()]
        except ValueError:
            raise FormatError(f"{path}:{n}: non-integer face entry in {line!r}") from None
        if not parts or parts[0] != 3 or len(parts) < 4:
            raise FormatError(f"{path}:{n}: only triangle faces are supported")
        tri = tuple(parts[1:4])
        for v in tri:
            if not 0 <= v < nv:
                raise FormatError(f"{path}:{n}: vertex index {v} out of range (have {nv} vertices)")
        if len(set(tri)) != 3:
            raise FormatError(f"{path}:{n}: degenerate face {tri}")
        faces.append(tri)
    return Mesh.from_triangles(faces, coords)


def write_off(path: str | Path, mesh: Mesh) -> None:
    if mesh.coords is None:
        raise ValueError("mesh has no coordinates")
    out = ["OFF", f"{len(mesh.coords)} {len(mesh.triangles)} 0"]
    out += [" ".join(repr(x) for x in p) for p in mesh.coords]
    out += ["3 " + " ".join(str(v) for v in t) for t in mesh.triangles]
    Path(path).write_text("\n".join(out) + "\n")


def read_vertex_function(path: str | Path, n_vertices: int, k: int | None = None) -> dict[int, tuple[float, ...]]:
    """One CSV row per vertex; a first row with no numeric field is taken as a header."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]

    def numeric(c: str) -> bool:
        try:
            float(c)
            return True
        except ValueError:
            return False

    if rows and not any(numeric(c) for c in rows[0]):
        rows = rows[1:]
    if len(rows) != n_vertices:
        raise FormatError(f"{path}: {len(rows)} rows for {n_vertices} vertices")
    out: dict[int, tuple[float, ...]] = {}
    for i, row in enumerate(rows):
        try:
            vals = tuple(float(c) for c in row)
        except ValueError:
            raise FormatError(f"{path}: row {i + 1} has a non-numeric field: {row}") from None
        if k is not None and len(vals) != k:
            raise FormatError(f"{path}: row {i + 1} has {len(vals)} columns, expected {k}")
        out[i] = vals
    if len({len(v) for v in out.values()}) > 1:
        raise FormatError(f"{path}: rows have differing column counts")
    return out


# -- VTK -----------------------------------------------------------------------

VTK_CELL_TYPES = {0: 1, 1: 3, 2: 5, 3: 10}


@dataclass
class VtkAnnotations:
    """Per-simplex arrays; any left empty are omitted from the file."""

    vector_field: DiscreteVectorField | None = None
    g: MdmFunction | None = None
    f: AdmissibleFunction | None = None
    pareto: set[int] | None = None
    component: dict[int, int] = field(default_factory=dict)


def write_vtk(
    path: str | Path,
    K: SimplicialComplex,
    coords: Sequence[Sequence[float]],
    annotations: VtkAnnotations | None = None,
) -> None:
    """Legacy ASCII UNSTRUCTURED_GRID; cell i is simplex i."""
    ann = annotations or VtkAnnotations()
    lines = ["# vtk DataFile Version 3.0", "multiparameter discrete Morse output", "ASCII", "DATASET UNSTRUCTURED_GRID"]
    lines.append(f"POINTS {len(coords)} double")
    lines += [" ".join(repr(float(x)) for x in (tuple(p) + (0.0,) * 3)[:3]) for p in coords]
    n = len(K)
    size = sum(len(s) + 1 for s in K.simplices)
    lines.append(f"CELLS {n} {size}")
    lines += [f"{len(s)} " + " ".join(str(v) for v in s) for s in K.simplices]
    lines.append(f"CELL_TYPES {n}")
    for d in K.dims:
        if d not in VTK_CELL_TYPES:
            raise ValueError(f"no VTK cell type for dimension {d}")
        lines.append(str(VTK_CELL_TYPES[d]))

    arrays: list[tuple[str, str, list[Any]]] = []
    if ann.vector_field is not None:
        V = ann.vector_field
        arrays.append(("criticality", "int", [K.dims[s] if s in V.critical else -1 for s in range(n)]))
        arrays.append(("partner", "int", [p if (p := V.partner(s)) is not None else -1 for s in range(n)]))
    if ann.pareto is not None:
        arrays.append(("pareto", "int", [int(s in ann.pareto) for s in range(n)]))
    if ann.component:
        arrays.append(("component", "int", [ann.component.get(s, -1) for s in range(n)]))
    if ann.g is not None and n:
        real = [ann.g.realized(s) for s in range(n)]
        for i in range(len(real[0])):
            arrays.append((f"g{i + 1}", "double", [r[i] for r in real]))
    if ann.f is not None and n:
        for i in range(ann.f.k):
            arrays.append((f"f{i + 1}", "double", [ann.f[s][i] for s in range(n)]))
    if arrays:
        lines.append(f"CELL_DATA {n}")
        for name, kind, vals in arrays:
            lines += [f"SCALARS {name} {kind} 1", "LOOKUP_TABLE default"]
            lines += [repr(float(v)) if kind == "double" else str(v) for v in vals]
    Path(path).write_text("\n".join(lines) + "\n")


# -- JSON report -------------------------------------------------------------------

def analysis_report(
    K: SimplicialComplex,
    V: DiscreteVectorField,
    levels: Sequence[LevelSet],
    betti: HomologySummary | None = None,
    g: MdmFunction | None = None,
    relative_perfect: bool | None = None,
    components: dict[str, int] | None = None,
    pareto_components: int | None = None,
) -> dict[str, Any]:
    counts = K.counts()
    m = V.critical_by_dim()
    n_levels, lam = level_stats(levels)
    rep: dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "simplices": len(K),
        "counts": counts,
        "critical": m,
        "percent_critical": [100.0 * a / b if b else 0.0 for a, b in zip(m, counts)],
        "n_levels": n_levels,
        "lambda": lam,
    }
    for i, c in enumerate(m):
        rep[f"m{i}"] = c
    if betti is not None:
        rep["betti"] = betti.betti
        rep["torsion"] = betti.torsion
        rep["ring"] = betti.ring
    if g is not None:
        rep["epsilon"] = g.epsilon
        rep["delta"] = g.delta
        rep["max_deviation"] = float(g.max_deviation())
    if relative_perfect is not None:
        rep["relative_perfect"] = relative_perfect
    if components is not None:
        rep["components"] = components
    if pareto_components is not None:
        rep["pareto_components"] = pareto_components
    return rep


def write_report(path: str | Path, report: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
