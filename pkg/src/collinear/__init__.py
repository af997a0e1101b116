"""Enumerate every maximal collinear subset of a planar integer point set."""
from .cyclic import (
    CollinearRun,
    MergedSequence,
    build_merged,
    detect_runs,
    filter_first_in_sigma,
)
from .enumeration import (
    ConsistencyError,
    EnumerationResult,
    canonicalize,
    enumerate_baseline,
    enumerate_layered,
    enumerate_parallel,
    enumerate_sets,
)
from .geometry import (
    COORD_BOUND,
    CoordinateRangeError,
    DuplicatePointError,
    FoldedDirection,
    GeometryError,
    Point,
    PointSet,
    SigmaOrder,
    cmp_folded,
    fold_direction,
    folded_key,
    orient,
)
from .inputs import generate, parse_points
from .layers import (
    ConvexLayer,
    Inside,
    LayerDecomposition,
    Outside,
    PivotOnLayer,
    SortedSubsequence,
    convex_hull_with_collinear,
    heap_merge,
    peel,
    split_layer,
    tangents,
)
from .oracle import brute_force

__version__ = "0.1.0"
