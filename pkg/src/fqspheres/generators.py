"""Point-set and sphere-family generators with reproducible sampling.

Shape grammar accepted by parse_shape:

* ``random:N``  N points drawn without replacement from F_q^d
* ``full``      all q^d points
* ``line``      the q points (t, 0), plane only
* ``circle``    every point of the unit circle at the origin, plane only
* ``circle:N``  N of those circle points, sampled without replacement
* ``grid:AxB``  the A-by-B coordinate box, plane only

Sampling is driven by SplitMix64, so output depends only on
(seed, shape, q, d).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .field import FieldSpec
from .geometry import DEFAULT_ENUMERATION_BUDGET, Point, Sphere
from .incidence import PointSet, SphereFamily
from .rng import SplitMix64

SHAPE_KINDS = ("random", "full", "line", "circle", "grid")


@dataclass(frozen=True)
class Shape:
    kind: str
    n: int | None = None
    rows: int | None = None
    cols: int | None = None


def parse_shape(text: str) -> Shape:
    """Parse a shape spec like ``random:12`` or ``grid:3x4``."""
    head, sep, tail = text.partition(":")
    head = head.strip()
    if head == "full" or head == "line":
        if sep:
            raise ValueError(f"shape {head!r} takes no argument")
        return Shape(kind=head)
    if head == "circle":
        if not sep:
            return Shape(kind="circle")
        return Shape(kind="circle", n=_positive_int(tail, "circle size"))
    if head == "random":
        if not sep:
            raise ValueError("random shape needs a size, e.g. random:12")
        n = _positive_int(tail, "random size", allow_zero=True)
        return Shape(kind="random", n=n)
    if head == "grid":
        a, x, b = tail.partition("x")
        if not x:
            raise ValueError("grid shape looks like grid:AxB")
        return Shape(
            kind="grid",
            rows=_positive_int(a, "grid rows"),
            cols=_positive_int(b, "grid cols"),
        )
    raise ValueError(f"unknown shape {head!r}, pick one of {SHAPE_KINDS}")


def _positive_int(text: str, what: str, allow_zero: bool = False) -> int:
    try:
        v = int(text.strip())
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    if v < 0 or (v == 0 and not allow_zero):
        raise ValueError(f"{what} must be positive, got {v}")
    return v


def _decode_point(field: FieldSpec, d: int, idx: int) -> Point:
    q = field.p
    coords = [0] * d
    for k in range(d - 1, -1, -1):
        coords[k] = idx % q
        idx //= q
    return Point(field, coords)


def _unit_circle_points(field: FieldSpec) -> list[Point]:
    """Points of the unit circle at the origin, in lexicographic order."""
    q = field.p
    out = []
    for x in range(q):
        for y in range(q):
            if (x * x + y * y) % q == 1:
                out.append(Point(field, (x, y)))
    return out


def generate_points(field: FieldSpec, d: int, shape, seed: int) -> PointSet:
    """Build the point set described by ``shape``; deterministic in seed."""
    if isinstance(shape, str):
        shape = parse_shape(shape)
    q = field.p
    if shape.kind == "full":
        if q**d > DEFAULT_ENUMERATION_BUDGET:
            raise BudgetExceededError(f"full F_{q}^{d} is too large to emit")
        return PointSet(
            field, d, [_decode_point(field, d, i) for i in range(q**d)]
        )
    if shape.kind == "random":
        total = q**d
        if shape.n > total:
            raise ValueError(
                f"infeasible size: {shape.n} points requested from {total}"
            )
        rng = SplitMix64(seed)
        ids = rng.sample(total, shape.n)
        return PointSet(field, d, [_decode_point(field, d, i) for i in ids])
    if d != 2:
        raise ValueError(f"shape {shape.kind!r} requires d = 2")
    if shape.kind == "line":
        return PointSet(field, d, [Point(field, (t, 0)) for t in range(q)])
    if shape.kind == "circle":
        base = _unit_circle_points(field)
        if shape.n is None:
            return PointSet(field, d, base)
        if shape.n > len(base):
            raise ValueError(
                f"infeasible size: the unit circle mod {q} has {len(base)} points"
            )
        rng = SplitMix64(seed)
        ids = rng.sample(len(base), shape.n)
        return PointSet(field, d, [base[i] for i in ids])
    if shape.kind == "grid":
        if shape.rows > q or shape.cols > q:
            raise ValueError(f"infeasible size: grid sides must be at most {q}")
        return PointSet(
            field,
            d,
            [Point(field, (i, j)) for i in range(shape.rows) for j in range(shape.cols)],
        )
    raise ValueError(f"unknown shape kind {shape.kind!r}")


def generate_spheres(field: FieldSpec, d: int, n: int, seed: int) -> SphereFamily:
    """n spheres drawn without replacement from all q^(d+1) of them."""
    q = field.p
    total = q ** (d + 1)
    if n > total:
        raise ValueError(f"infeasible size: {n} spheres requested from {total}")
    rng = SplitMix64(seed)
    ids = rng.sample(total, n)
    out = []
    for i in ids:
        lam = i % q
        center = _decode_point(field, d, i // q)
        out.append(Sphere(center, lam))
    return SphereFamily(field, d, out)


def all_spheres(field: FieldSpec, d: int) -> SphereFamily:
    """Every sphere of F_q^d, in center-then-parameter order."""
    q = field.p
    if q ** (d + 1) > DEFAULT_ENUMERATION_BUDGET:
        raise BudgetExceededError(f"all spheres of F_{q}^{d} is too large to emit")
    out = []
    for i in range(q**d):
        center = _decode_point(field, d, i)
        for lam in range(q):
            out.append(Sphere(center, lam))
    return SphereFamily(field, d, out)
