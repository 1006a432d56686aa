"""Incidence counting, representation functions and additive energy.

Three independent engines count point/sphere incidences:

* ``naive`` tests every pair directly,
* ``bucketed`` groups spheres by center and histograms distances,
* ``lifted`` rewrites incidence as membership of a vector difference
  in the lifted paraboloid of F_q^(d+1).

They share no counting logic and must always agree; the test suite
leans on that redundancy.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import product

from . import _kernels
from .errors import ContextMismatchError
from .field import FieldSpec
from .geometry import Point, Sphere

ENGINES = ("naive", "bucketed", "lifted")


class PointSet:
    """Duplicate-free collection of points sharing one (q, d) context."""

    __slots__ = ("field", "d", "points", "_flat")

    def __init__(self, field: FieldSpec, d: int, points: Iterable = ()):
        if not isinstance(d, int) or d < 1:
            raise ValueError("ambient dimension must be a positive int")
        self.field = field
        self.d = d
        seen = set()
        rows = []
        for p in points:
            if not isinstance(p, Point):
                p = Point(field, p)
            if p.field != field:
                raise ContextMismatchError(
                    f"point over F_{p.field.p} in a set over F_{field.p}"
                )
            if p.dim != d:
                raise ContextMismatchError(
                    f"point of dimension {p.dim} in a set of dimension {d}"
                )
            if p in seen:
                raise ValueError(f"duplicate point {p.coords}")
            seen.add(p)
            rows.append(p)
        self.points = tuple(rows)
        self._flat = None

    @property
    def q(self) -> int:
        return self.field.p

    def flat(self) -> list[int]:
        """Row-major coordinate list for the kernels; cached."""
        if self._flat is None:
            out = []
            for p in self.points:
                out.extend(p.coords)
            self._flat = out
        return self._flat

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in self.points

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return (
                self.field == other.field
                and self.d == other.d
                and frozenset(self.points) == frozenset(other.points)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.d, frozenset(self.points)))

    def __repr__(self) -> str:
        return f"PointSet(q={self.q}, d={self.d}, n={len(self)})"


class SphereFamily:
    """Duplicate-free collection of spheres sharing one (q, d) context."""

    __slots__ = ("field", "d", "spheres", "_flat")

    def __init__(self, field: FieldSpec, d: int, spheres: Iterable = ()):
        if not isinstance(d, int) or d < 1:
            raise ValueError("ambient dimension must be a positive int")
        self.field = field
        self.d = d
        seen = set()
        rows = []
        for s in spheres:
            if not isinstance(s, Sphere):
                center, lam = s
                s = Sphere(Point(field, center), lam)
            if s.field != field:
                raise ContextMismatchError(
                    f"sphere over F_{s.field.p} in a family over F_{field.p}"
                )
            if s.dim != d:
                raise ContextMismatchError(
                    f"sphere of dimension {s.dim} in a family of dimension {d}"
                )
            if s in seen:
                raise ValueError(
                    f"duplicate sphere (center={s.center.coords}, lam={s.lam})"
                )
            seen.add(s)
            rows.append(s)
        self.spheres = tuple(rows)
        self._flat = None

    @property
    def q(self) -> int:
        return self.field.p

    def flat(self) -> list[int]:
        """Row-major (center, lam) list for the kernels; cached."""
        if self._flat is None:
            out = []
            for s in self.spheres:
                out.extend(s.center.coords)
                out.append(s.lam)
            self._flat = out
        return self._flat

    def __len__(self) -> int:
        return len(self.spheres)

    def __iter__(self):
        return iter(self.spheres)

    def __eq__(self, other) -> bool:
        if isinstance(other, SphereFamily):
            return (
                self.field == other.field
                and self.d == other.d
                and frozenset(self.spheres) == frozenset(other.spheres)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.d, frozenset(self.spheres)))

    def __repr__(self) -> str:
        return f"SphereFamily(q={self.q}, d={self.d}, n={len(self)})"


def _same_context(points: PointSet, spheres: SphereFamily) -> None:
    if points.field != spheres.field or points.d != spheres.d:
        raise ContextMismatchError(
            "point set and sphere family disagree on (q, d)"
        )


def count_incidences(
    points: PointSet, spheres: SphereFamily, engine: str = "bucketed"
) -> int:
    """Number of pairs (p, s) with p on s, by the chosen engine."""
    _same_context(points, spheres)
    if engine == "naive":
        fn = _kernels.incidences_naive
    elif engine == "bucketed":
        fn = _kernels.incidences_bucketed
    elif engine == "lifted":
        fn = _kernels.incidences_lifted
    else:
        raise ValueError(f"unknown engine {engine!r}, pick one of {ENGINES}")
    return fn(points.q, points.d, points.flat(), spheres.flat())


class RepFunction:
    """Sparse representation-count map over F_q^k."""

    __slots__ = ("q", "k", "counts")

    def __init__(self, q: int, k: int, counts: dict):
        self.q = q
        self.k = k
        self.counts = {v: c for v, c in counts.items() if c}

    def __getitem__(self, v) -> int:
        key = tuple(c % self.q for c in v)
        return self.counts.get(key, 0)

    def total(self) -> int:
        """Sum over all of F_q^k; equals |A| * |B| by double counting."""
        return sum(self.counts.values())

    def support_size(self) -> int:
        return len(self.counts)

    def items(self):
        return self.counts.items()

    def __eq__(self, other) -> bool:
        if isinstance(other, RepFunction):
            return (
                self.q == other.q
                and self.k == other.k
                and self.counts == other.counts
            )
        return NotImplemented

    def __repr__(self) -> str:
        return f"RepFunction(q={self.q}, k={self.k}, support={len(self.counts)})"


def _coerce_vectors(vs: Iterable, q: int) -> tuple[frozenset, int]:
    """Normalize an iterable of int tuples mod q; returns (set, arity)."""
    out = set()
    k = None
    for v in vs:
        t = tuple(int(c) % q for c in v)
        if k is None:
            k = len(t)
        elif len(t) != k:
            raise ContextMismatchError("vectors of mixed arity")
        out.add(t)
    if k is None:
        k = 0
    if out and k < 1:
        raise ValueError("vectors need at least one coordinate")
    return frozenset(out), k


def _rep(A: Iterable, B: Iterable, q: int, sign: int) -> RepFunction:
    sa, ka = _coerce_vectors(A, q)
    sb, kb = _coerce_vectors(B, q)
    if sa and sb and ka != kb:
        raise ContextMismatchError(f"arity mismatch: {ka} vs {kb}")
    k = ka or kb
    counts: dict[tuple, int] = {}
    for a in sa:
        for b in sb:
            x = tuple((ai + sign * bi) % q for ai, bi in zip(a, b))
            counts[x] = counts.get(x, 0) + 1
    return RepFunction(q, k, counts)


def rep_sum(A: Iterable, B: Iterable, q: int) -> RepFunction:
    """Counts of each target x as an ordered sum a + b, a in A, b in B."""
    return _rep(A, B, q, 1)


def rep_diff(A: Iterable, B: Iterable, q: int) -> RepFunction:
    """Counts of each target x as an ordered difference a - b."""
    return _rep(A, B, q, -1)


def additive_energy(A: Iterable, B: Iterable, q: int, side: str = "lhs") -> int:
    """Additive energy of (A, B): the number of quadruples with a+b = a'+b'.

    ``lhs`` sums the squared sum-representation counts; ``rhs`` pairs
    the difference-count functions of A and B. The two sides are
    always equal, which the test suite checks over seeded trials.
    """
    if side == "lhs":
        r = rep_sum(A, B, q)
        return sum(c * c for c in r.counts.values())
    if side == "rhs":
        ra = rep_diff(A, A, q)
        rb = rep_diff(B, B, q)
        small, big = (ra, rb) if len(ra.counts) <= len(rb.counts) else (rb, ra)
        return sum(c * big.counts.get(x, 0) for x, c in small.counts.items())
    raise ValueError(f"side must be 'lhs' or 'rhs', got {side!r}")


def lifted_diff_count(x, q: int, d: int, mode: str = "closed") -> int:
    """Representations of x in F_q^(d+1) as a paraboloid difference.

    ``closed`` evaluates the case formula: q^d at the origin, 0 when
    only the last coordinate is nonzero, q^(d-1) otherwise. ``brute``
    enumerates the q^d base points directly. The modes agree for
    every x, which is exercised exhaustively in tests.
    """
    coords = tuple(int(c) % q for c in x)
    if len(coords) != d + 1:
        raise ContextMismatchError(
            f"expected a vector of length {d + 1}, got {len(coords)}"
        )
    if mode == "closed":
        if all(c == 0 for c in coords):
            return q**d
        if all(c == 0 for c in coords[:d]):
            return 0
        return q ** (d - 1)
    if mode != "brute":
        raise ValueError(f"mode must be 'closed' or 'brute', got {mode!r}")
    count = 0
    base = coords[:d]
    last = coords[d]
    for u in product(range(q), repeat=d):
        su = sum(c * c for c in u) % q
        v = tuple((u[i] - base[i]) % q for i in range(d))
        sv = sum(c * c for c in v) % q
        if (su - sv) % q == last:
            count += 1
    return count


def lifted_diff_table(q: int, d: int) -> list[int]:
    """Brute-force difference table over all of F_q^(d+1).

    Index encoding is big-endian base q: the entry for x sits at
    x_1 * q^d + x_2 * q^(d-1) + ... + x_{d+1}. Computed by the kernel
    backend from all q^(2d) ordered paraboloid pairs.
    """
    return _kernels.paraboloid_diff_table(q, d)
