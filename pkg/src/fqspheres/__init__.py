"""Exact point/sphere incidence geometry over odd prime fields.

The package counts incidences between point sets and spheres of
F_q^d with three independent engines, and checks an incidence
deviation bound, pinned-distance consequences and a determined-circles
lower bound entirely in exact arithmetic at desk scale.
"""

from ._kernels import kernel_backend
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    FileFormatError,
    InternalCheckError,
)
from .field import FieldElement, FieldSpec, inv_mod, legendre_symbol, make_field
from .generators import (
    Shape,
    all_spheres,
    generate_points,
    generate_spheres,
    parse_shape,
)
from .geometry import (
    LiftedVector,
    Point,
    Sphere,
    circle_through,
    collinear,
    distance,
    lift,
    lifted_contains,
    sphere_contains,
    sphere_points,
)
from .incidence import (
    ENGINES,
    PointSet,
    RepFunction,
    SphereFamily,
    additive_energy,
    count_incidences,
    lifted_diff_count,
    lifted_diff_table,
    rep_diff,
    rep_sum,
)
from .pointfile import read_set, write_points, write_spheres
from .rng import SplitMix64, derive_seed
from .theorems import (
    BeckReport,
    IncidenceReport,
    PinnedReport,
    check_beck,
    check_incidence_bound,
    check_pinned_average,
    check_pinned_fraction,
    determined_circles,
    pinned_cover,
    pinned_set,
    rich_circles,
)

__version__ = "0.1.0"

__all__ = [
    "BeckReport",
    "BudgetExceededError",
    "ContextMismatchError",
    "ENGINES",
    "FieldElement",
    "FieldSpec",
    "FileFormatError",
    "IncidenceReport",
    "InternalCheckError",
    "LiftedVector",
    "PinnedReport",
    "Point",
    "PointSet",
    "RepFunction",
    "Shape",
    "Sphere",
    "SphereFamily",
    "SplitMix64",
    "additive_energy",
    "all_spheres",
    "check_beck",
    "check_incidence_bound",
    "check_pinned_average",
    "check_pinned_fraction",
    "circle_through",
    "collinear",
    "count_incidences",
    "derive_seed",
    "determined_circles",
    "distance",
    "generate_points",
    "generate_spheres",
    "inv_mod",
    "kernel_backend",
    "legendre_symbol",
    "lift",
    "lifted_contains",
    "lifted_diff_count",
    "lifted_diff_table",
    "make_field",
    "parse_shape",
    "pinned_cover",
    "pinned_set",
    "read_set",
    "rep_diff",
    "rep_sum",
    "rich_circles",
    "sphere_contains",
    "sphere_points",
    "write_points",
    "write_spheres",
]
