"""Points, the quadratic distance, spheres and circles over F_q.

The distance between two points is the sum of squared coordinate
differences. It is a quadratic form, not a metric: distinct points
can be at distance zero. A sphere is the pair (center, radius
parameter); the parameter 0 is allowed and names the degenerate
isotropic sphere, which in the plane is a single point or a pair of
crossing lines depending on whether -1 is a square mod q.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import product

from .errors import BudgetExceededError, ContextMismatchError
from .field import FieldElement, FieldSpec, inv_mod

DEFAULT_ENUMERATION_BUDGET = 1_000_000


def _residues(field: FieldSpec, coords: Iterable) -> tuple[int, ...]:
    vals = []
    for c in coords:
        if isinstance(c, FieldElement):
            if c.spec != field:
                raise ContextMismatchError(
                    f"coordinate from F_{c.spec.p} used in F_{field.p}"
                )
            vals.append(c.value)
        elif isinstance(c, int) and not isinstance(c, bool):
            vals.append(c % field.p)
        else:
            raise TypeError("coordinates must be ints or field elements")
    return tuple(vals)


class Point:
    """A point of F_q^d, coordinates stored as canonical residues."""

    __slots__ = ("field", "coords")

    def __init__(self, field: FieldSpec, coords: Iterable):
        self.field = field
        self.coords = _residues(field, coords)
        if not self.coords:
            raise ValueError("points need at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, Point):
            return self.coords == other.coords and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.coords))

    def __repr__(self) -> str:
        return f"Point({self.coords}, q={self.field.p})"


class Sphere:
    """The sphere of center c and radius parameter lam in F_q^d."""

    __slots__ = ("center", "lam")

    def __init__(self, center: Point, lam):
        if not isinstance(center, Point):
            raise TypeError("sphere centers are Points")
        self.center = center
        if isinstance(lam, FieldElement):
            if lam.spec != center.field:
                raise ContextMismatchError("radius parameter from another field")
            self.lam = lam.value
        elif isinstance(lam, int) and not isinstance(lam, bool):
            self.lam = lam % center.field.p
        else:
            raise TypeError("radius parameter must be an int or field element")

    @property
    def field(self) -> FieldSpec:
        return self.center.field

    @property
    def dim(self) -> int:
        return self.center.dim

    def __eq__(self, other) -> bool:
        if isinstance(other, Sphere):
            return self.center == other.center and self.lam == other.lam
        return NotImplemented

    def __hash__(self):
        return hash((self.center, self.lam))

    def __repr__(self) -> str:
        return f"Sphere(center={self.center.coords}, lam={self.lam}, q={self.field.p})"


class LiftedVector:
    """A vector of F_q^(d+1), the ambient space of the lifted paraboloid."""

    __slots__ = ("field", "coords")

    def __init__(self, field: FieldSpec, coords: Iterable):
        self.field = field
        self.coords = _residues(field, coords)
        if len(self.coords) < 2:
            raise ValueError("lifted vectors live in dimension at least 2")

    @property
    def dim(self) -> int:
        """Dimension of the base space, one less than the vector length."""
        return len(self.coords) - 1

    def __sub__(self, other: LiftedVector) -> LiftedVector:
        if not isinstance(other, LiftedVector):
            return NotImplemented
        if self.field != other.field or len(self.coords) != len(other.coords):
            raise ContextMismatchError("lifted vectors from different contexts")
        p = self.field.p
        return LiftedVector(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coords, other.coords)),
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, LiftedVector):
            return self.coords == other.coords and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, "lifted", self.coords))

    def __repr__(self) -> str:
        return f"LiftedVector({self.coords}, q={self.field.p})"


def _same_context(x: Point, y: Point) -> None:
    if x.field != y.field:
        raise ContextMismatchError(
            f"points from F_{x.field.p} and F_{y.field.p}"
        )
    if x.dim != y.dim:
        raise ContextMismatchError(
            f"points of dimension {x.dim} and {y.dim}"
        )


def distance(x: Point, y: Point) -> FieldElement:
    """Sum of squared coordinate differences, as a field element."""
    _same_context(x, y)
    p = x.field.p
    s = 0
    for a, b in zip(x.coords, y.coords):
        t = a - b
        s += t * t
    return FieldElement(x.field, s % p)


def sphere_contains(s: Sphere, x: Point) -> bool:
    """True iff x lies on s, i.e. distance(center, x) == lam."""
    _same_context(s.center, x)
    return distance(s.center, x).value == s.lam


def sphere_points(s: Sphere, budget: int = DEFAULT_ENUMERATION_BUDGET) -> set[Point]:
    """All points of the sphere, by scanning F_q^d. Guarded by ``budget``."""
    q = s.field.p
    d = s.dim
    if q**d > budget:
        raise BudgetExceededError(
            f"enumerating F_{q}^{d} needs {q**d} points, budget is {budget}"
        )
    cx = s.center.coords
    lam = s.lam
    out = set()
    for coords in product(range(q), repeat=d):
        t = 0
        for a, b in zip(coords, cx):
            u = a - b
            t += u * u
        if t % q == lam:
            out.add(Point(s.field, coords))
    return out


def lift(x: Point) -> LiftedVector:
    """Append the sum of squared coordinates, landing on the paraboloid."""
    q = x.field.p
    s = sum(c * c for c in x.coords) % q
    return LiftedVector(x.field, x.coords + (s,))


def lifted_contains(v: LiftedVector) -> bool:
    """True iff v lies on the paraboloid: last coord equals the sum of squares."""
    q = v.field.p
    base = v.coords[:-1]
    return sum(c * c for c in base) % q == v.coords[-1]


def _require_plane(*pts: Point) -> None:
    for x in pts:
        if x.dim != 2:
            raise ValueError("requires d = 2")


def collinear(x1: Point, x2: Point, x3: Point) -> bool:
    """Cross-product test in the plane. Triples with repeats count as collinear."""
    _same_context(x1, x2)
    _same_context(x1, x3)
    _require_plane(x1, x2, x3)
    q = x1.field.p
    ax, ay = x1.coords
    bx, by = x2.coords
    cx, cy = x3.coords
    return ((bx - ax) * (cy - ay) - (cx - ax) * (by - ay)) % q == 0


def circle_through(x1: Point, x2: Point, x3: Point) -> Sphere | None:
    """The unique circle through three points of the plane, or None.

    Subtracting the circle equation of x2 and of x3 from that of x1
    leaves a linear system in the center. Its determinant is 4 times
    the collinearity cross product, and 4 is invertible in odd
    characteristic, so the system is solvable exactly when the points
    are pairwise distinct and not collinear. Degenerate inputs give
    None. The returned parameter may be 0: a non-collinear triple can
    sit on an isotropic circle when -1 is a square mod q.
    """
    _same_context(x1, x2)
    _same_context(x1, x3)
    _require_plane(x1, x2, x3)
    q = x1.field.p
    ax, ay = x1.coords
    bx, by = x2.coords
    cx, cy = x3.coords
    disc = ((ax - bx) * (ay - cy) - (ax - cx) * (ay - by)) % q
    if disc == 0:
        return None
    s1 = ax * ax + ay * ay
    r1 = (s1 - bx * bx - by * by) % q
    r2 = (s1 - cx * cx - cy * cy) % q
    dinv = inv_mod(4 * disc, q)
    ca = (2 * (r1 * (ay - cy) - r2 * (ay - by))) * dinv % q
    cb = (2 * ((ax - bx) * r2 - (ax - cx) * r1)) * dinv % q
    lam = ((ax - ca) ** 2 + (ay - cb) ** 2) % q
    return Sphere(Point(x1.field, (ca, cb)), lam)
