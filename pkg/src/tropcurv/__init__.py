"""Tropical hypersurfaces, sign patchworking and their curvature."""
from .core_geometry import (
    AngleConfig,
    AngleMeasure,
    Cone,
    HalfSpace,
    LatticeSimplex,
    a_constant,
    cone_facets,
    is_elementary,
    is_primitive,
    simplex_lattice_volume,
    solid_angle,
    sphere_volume,
)
from .curvature import (
    complex_total_curvature,
    curvature_cone,
    gauss_bonnet,
    partition_check,
    per_vertex_total,
    polyhedral_total_curvature,
    real_total_curvature_nonsingular,
    verify_inequality,
    verify_vertex_sum,
    vertex_curvature,
)
from .patchwork import SignDistribution, cell_present, orbit_analysis, orthants, real_part, twist
from .tropical import (
    TropicalPolynomial,
    classify,
    dual_subdivision,
    evaluate,
    hypersurface,
    initial_part,
    monomial_shift,
    parse_tropical,
    read_document,
    write_document,
)

__all__ = [
    "AngleConfig",
    "AngleMeasure",
    "Cone",
    "HalfSpace",
    "LatticeSimplex",
    "a_constant",
    "cone_facets",
    "is_elementary",
    "is_primitive",
    "simplex_lattice_volume",
    "solid_angle",
    "sphere_volume",
    "complex_total_curvature",
    "curvature_cone",
    "gauss_bonnet",
    "partition_check",
    "per_vertex_total",
    "polyhedral_total_curvature",
    "real_total_curvature_nonsingular",
    "verify_inequality",
    "verify_vertex_sum",
    "vertex_curvature",
    "SignDistribution",
    "cell_present",
    "orbit_analysis",
    "orthants",
    "real_part",
    "twist",
    "TropicalPolynomial",
    "classify",
    "dual_subdivision",
    "evaluate",
    "hypersurface",
    "initial_part",
    "monomial_shift",
    "parse_tropical",
    "read_document",
    "write_document",
]

__version__ = "0.1.0"
