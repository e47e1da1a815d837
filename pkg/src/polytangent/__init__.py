"""Separating and outer common tangents of two simple polygons.

The tangent walks run in linear time with constant working storage over
read-only corner arrays; the package also ships the brute-force oracle,
the seeded instance generator and the file format used to prove the walks
correct at desk scale.
"""

from .geom import (
    COORD_BOUND,
    CoordinateOverflow,
    GeometryError,
    Point,
    in_left_half_plane,
    orient,
    segments_intersect,
)
from .polygon import (
    Orientation,
    PolygonView,
    ReversedView,
    ValidationReport,
    check_general_position,
    first_self_intersection,
    is_simple,
    reversed_view,
    signed_area_times_two,
)
from .tangents import (
    NotSeparable,
    PreconditionUncertain,
    RunStats,
    TangentResult,
    TraceRecord,
    hulls_disjoint,
    outer_common_tangent,
    second_outer_tangent,
    second_separating_tangent,
    separating_common_tangent,
)
from .oracle import (
    GeneralPositionError,
    OracleReport,
    classify_all_corner_pairs,
    convex_hull,
    hulls_disjoint_bruteforce,
)
from .generator import (
    GenSpec,
    GenerationError,
    Regime,
    SplitMix64,
    generate_pair,
    random_star_polygon,
)
from .fileformat import PolygonFileError, import_float, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "COORD_BOUND",
    "CoordinateOverflow",
    "GeneralPositionError",
    "GenerationError",
    "GenSpec",
    "GeometryError",
    "NotSeparable",
    "OracleReport",
    "Orientation",
    "Point",
    "PolygonFileError",
    "PolygonView",
    "PreconditionUncertain",
    "Regime",
    "ReversedView",
    "RunStats",
    "SplitMix64",
    "TangentResult",
    "TraceRecord",
    "ValidationReport",
    "check_general_position",
    "classify_all_corner_pairs",
    "convex_hull",
    "first_self_intersection",
    "generate_pair",
    "hulls_disjoint",
    "hulls_disjoint_bruteforce",
    "import_float",
    "in_left_half_plane",
    "is_simple",
    "orient",
    "outer_common_tangent",
    "parse",
    "random_star_polygon",
    "reversed_view",
    "second_outer_tangent",
    "second_separating_tangent",
    "segments_intersect",
    "separating_common_tangent",
    "serialize",
    "signed_area_times_two",
]
