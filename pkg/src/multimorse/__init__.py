"""Multiparameter discrete Morse functions on simplicial complexes."""
from .complex import (
    IndexingMap,
    SimplicialComplex,
    axis_indexing_map,
    boundary,
    closure,
    connected_components,
    exit_set,
    interior,
    star,
)
from .field import DiscreteVectorField, connection, gradient_of, is_acyclic, is_compatible
from .filtration import AdmissibleFunction, check_admissible, level_sets, max_extension, projection_map, rips_diameter_map
from .homology import betti_numbers, morse_count_check, relative_homology, smith_normal_form
from .mdm import MdmValue, compute_delta, compute_g, generate_mdm, verify_mdm
from .pareto import critical_components, pareto_set, primary_simplex

__all__ = [
    "AdmissibleFunction",
    "DiscreteVectorField",
    "IndexingMap",
    "MdmValue",
    "SimplicialComplex",
    "axis_indexing_map",
    "betti_numbers",
    "boundary",
    "check_admissible",
    "closure",
    "compute_delta",
    "compute_g",
    "connected_components",
    "connection",
    "critical_components",
    "exit_set",
    "generate_mdm",
    "gradient_of",
    "interior",
    "is_acyclic",
    "is_compatible",
    "level_sets",
    "max_extension",
    "morse_count_check",
    "pareto_set",
    "primary_simplex",
    "projection_map",
    "relative_homology",
    "rips_diameter_map",
    "smith_normal_form",
    "star",
    "verify_mdm",
]
