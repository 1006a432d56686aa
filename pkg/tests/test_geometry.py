from itertools import combinations, product

import pytest

from fqspheres import (
    BudgetExceededError,
    ContextMismatchError,
    LiftedVector,
    Point,
    Sphere,
    circle_through,
    collinear,
    distance,
    legendre_symbol,
    lift,
    lifted_contains,
    make_field,
    sphere_contains,
    sphere_points,
)

F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)


def all_points(field, d):
    return [Point(field, c) for c in product(range(field.p), repeat=d)]


def test_distance_example():
    assert distance(Point(F5, (1, 2)), Point(F5, (4, 4))).value == 3


def test_distance_is_symmetric_with_zero_diagonal():
    pts = all_points(F5, 2)
    for x in pts:
        assert distance(x, x).value == 0
        for y in pts:
            assert distance(x, y) == distance(y, x)


def test_distinct_points_at_distance_zero_exist():
    # the form is not a metric: 1^2 + 2^2 = 5 = 0 mod 5
    assert distance(Point(F5, (0, 0)), Point(F5, (1, 2))).value == 0


def test_distance_context_checks():
    with pytest.raises(ContextMismatchError):
        distance(Point(F5, (1, 2)), Point(F7, (1, 2)))
    with pytest.raises(ContextMismatchError):
        distance(Point(F5, (1, 2)), Point(F5, (1, 2, 3)))


def test_point_validation():
    with pytest.raises(ValueError):
        Point(F5, ())
    with pytest.raises(TypeError):
        Point(F5, (1.5, 2))
    assert Point(F5, (-1, 7)).coords == (4, 2)


def test_sphere_contains_matches_distance():
    for c in all_points(F3, 2):
        for lam in range(3):
            s = Sphere(c, lam)
            for x in all_points(F3, 2):
                assert sphere_contains(s, x) == (distance(c, x).value == lam)


def test_sphere_points_against_direct_scan():
    for q, field in ((3, F3), (5, F5)):
        for c in all_points(field, 2):
            for lam in range(q):
                got = sphere_points(Sphere(c, lam))
                expected = {
                    x for x in all_points(field, 2) if distance(c, x).value == lam
                }
                assert got == expected


def test_sphere_points_budget():
    F13 = make_field(13)
    s = Sphere(Point(F13, (0, 0, 0, 0, 0, 0)), 1)
    with pytest.raises(BudgetExceededError):
        sphere_points(s, budget=1000)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_circle_sizes_match_character_formula(q):
    """Nondegenerate circles have q - chi(-1) points; degenerate ones
    collapse to a point or two crossing lines."""
    field = make_field(q)
    chi = legendre_symbol(-1, q)
    centers = [Point(field, (0, 0)), Point(field, (1, 2)), Point(field, (q - 1, 3))]
    if q <= 7:
        centers = all_points(field, 2)
    for c in centers:
        for lam in range(q):
            n = len(sphere_points(Sphere(c, lam)))
            if lam == 0:
                assert n == (2 * q - 1 if chi == 1 else 1)
            else:
                assert n == q - chi


def test_lift_examples():
    assert lift(Point(F3, (1, 2))).coords == (1, 2, 2)
    assert lift(Point(F5, (2, 3))).coords == (2, 3, 3)


@pytest.mark.parametrize("q,d", [(3, 1), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)])
def test_lift_lands_on_paraboloid(q, d):
    field = make_field(q)
    for coords in product(range(q), repeat=d):
        v = lift(Point(field, coords))
        assert lifted_contains(v)
        assert v.dim == d


@pytest.mark.parametrize("q,d", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_incidence_equals_lifted_membership(q, d):
    """p on S(c, lam) iff (p, 0) - (c, -lam) lies on the paraboloid."""
    field = make_field(q)
    pts = all_points(field, d)
    for p in pts:
        b = LiftedVector(field, p.coords + (0,))
        for c in pts:
            for lam in range(q):
                cvec = LiftedVector(field, c.coords + ((-lam) % q,))
                assert sphere_contains(Sphere(c, lam), p) == lifted_contains(b - cvec)


def test_lifted_vector_ops():
    v = LiftedVector(F5, (1, 2, 3))
    w = LiftedVector(F5, (4, 4, 0))
    assert (v - w).coords == (2, 3, 3)
    with pytest.raises(ContextMismatchError):
        v - LiftedVector(F7, (1, 2, 3))
    with pytest.raises(ValueError):
        LiftedVector(F5, (1,))


def lines_through(field):
    """All lines of the plane as frozen point sets; oracle for collinearity."""
    q = field.p
    out = set()
    for a, b, c in product(range(q), repeat=3):
        if a == 0 and b == 0:
            continue
        out.add(
            frozenset(
                (x, y)
                for x, y in product(range(q), repeat=2)
                if (a * x + b * y + c) % q == 0
            )
        )
    return out


@pytest.mark.parametrize("field", [F3, F5])
def test_collinear_against_line_enumeration(field):
    lines = lines_through(field)
    pts = all_points(field, 2)
    for x1, x2, x3 in combinations(pts, 3):
        trip = {x1.coords, x2.coords, x3.coords}
        expected = any(trip <= line for line in lines)
        assert collinear(x1, x2, x3) == expected


def test_collinear_with_repeats_is_true():
    a = Point(F5, (1, 2))
    b = Point(F5, (3, 0))
    assert collinear(a, a, b)
    assert collinear(a, b, a)
    assert collinear(b, a, a)
    assert collinear(a, a, a)


def test_collinear_requires_plane():
    a = Point(F5, (1, 2, 0))
    with pytest.raises(ValueError, match="d = 2"):
        collinear(a, a, a)


def test_circle_through_example():
    s = circle_through(Point(F5, (0, 1)), Point(F5, (1, 0)), Point(F5, (0, 4)))
    assert s is not None
    assert s.center.coords == (0, 0)
    assert s.lam == 1


def test_circle_through_degenerate_inputs():
    a = Point(F5, (0, 0))
    b = Point(F5, (1, 2))
    c = Point(F5, (2, 4))
    assert circle_through(a, b, c) is None  # collinear
    assert circle_through(a, a, b) is None  # repeat


def test_collinear_triple_lies_on_five_degenerate_circles():
    # over F_5 the triple (0,0),(1,2),(2,4) sits on the circles
    # centered at (3b, b) with parameter 0, and on nothing else
    triple = [Point(F5, (0, 0)), Point(F5, (1, 2)), Point(F5, (2, 4))]
    hits = []
    for a, b, lam in product(range(5), repeat=3):
        s = Sphere(Point(F5, (a, b)), lam)
        if all(sphere_contains(s, x) for x in triple):
            hits.append((a, b, lam))
    assert sorted(hits) == sorted(((3 * b) % 5, b, 0) for b in range(5))


@pytest.mark.parametrize("field", [F3, F5])
def test_circle_through_matches_scan(field):
    """Non-collinear triples determine exactly the circle the scan finds."""
    q = field.p
    pts = all_points(field, 2)
    spheres = [
        Sphere(Point(field, (a, b)), lam)
        for a, b, lam in product(range(q), repeat=3)
    ]
    for x1, x2, x3 in combinations(pts, 3):
        found = [
            s
            for s in spheres
            if sphere_contains(s, x1)
            and sphere_contains(s, x2)
            and sphere_contains(s, x3)
        ]
        solved = circle_through(x1, x2, x3)
        if collinear(x1, x2, x3):
            assert solved is None
        else:
            assert len(found) == 1
            assert solved == found[0]


def test_distinct_circles_share_few_points_unless_both_degenerate():
    # pairs with a nonzero parameter share at most 2 points; two
    # degenerate circles can share a whole isotropic line when -1 is
    # a square, so they are excluded here and witnessed below
    for field in (F5, F7):
        q = field.p
        cache = {}
        for a, b, lam in product(range(q), repeat=3):
            cache[(a, b, lam)] = frozenset(
                p.coords for p in sphere_points(Sphere(Point(field, (a, b)), lam))
            )
        keys = list(cache)
        for i, k1 in enumerate(keys):
            for k2 in keys[i + 1 :]:
                if k1[2] == 0 and k2[2] == 0:
                    continue
                assert len(cache[k1] & cache[k2]) <= 2


def test_two_degenerate_circles_can_share_a_line():
    a = sphere_points(Sphere(Point(F5, (0, 0)), 0))
    b = sphere_points(Sphere(Point(F5, (3, 1)), 0))
    shared = {p.coords for p in a} & {p.coords for p in b}
    assert len(shared) == 5  # the isotropic line y = 2x


def test_sphere_equality_and_validation():
    s1 = Sphere(Point(F5, (1, 2)), 3)
    s2 = Sphere(Point(F5, (1, 2)), -2)
    assert s1 == s2
    assert hash(s1) == hash(s2)
    with pytest.raises(TypeError):
        Sphere((1, 2), 3)
    with pytest.raises(ContextMismatchError):
        Sphere(Point(F5, (1, 2)), F7.element(1))
