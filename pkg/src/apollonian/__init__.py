"""Apollonian weak metric and its relatives on planar domains."""

from .config import DEFAULT, Config
from .domains import (
    ConvexPolygon,
    SampledBoundary,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    chord,
    domain_from_json,
    ray_exit,
    sample_boundary,
)
from .errors import (
    DegenerateInput,
    GeometryError,
    IneligibleDomain,
    PointOutsideDomain,
    SearchFailed,
    UnboundedDomain,
)
from .geodesics import (
    aligned,
    argmax_set,
    common_witness,
    geodesic_arc_disk,
    sample_arc,
    verify_geodesic,
)
from .geom import (
    INFINITY,
    Circle,
    Line,
    MobiusMap,
    Similarity,
    circumcircle,
    cross_ratio,
    invert_unit_circle,
)
from .metrics import *  # noqa: F403
from .metrics import __all__ as _metrics_all

__version__ = "0.1.0"

__all__ = [
    "Config", "DEFAULT",
    "ConvexPolygon", "SampledBoundary", "UnitDisk", "UpperHalfPlane",
    "boundary_distance", "chord", "domain_from_json", "ray_exit", "sample_boundary",
    "DegenerateInput", "GeometryError", "IneligibleDomain", "PointOutsideDomain",
    "SearchFailed", "UnboundedDomain",
    "aligned", "argmax_set", "common_witness", "geodesic_arc_disk", "sample_arc",
    "verify_geodesic",
    "INFINITY", "Circle", "Line", "MobiusMap", "Similarity", "circumcircle",
    "cross_ratio", "invert_unit_circle",
    *_metrics_all,
]
