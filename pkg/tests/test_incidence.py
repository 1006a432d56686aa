from itertools import product

import pytest

from fqspheres import (
    ContextMismatchError,
    Point,
    PointSet,
    Sphere,
    SphereFamily,
    SplitMix64,
    additive_energy,
    count_incidences,
    lifted_diff_count,
    lifted_diff_table,
    make_field,
    rep_diff,
    rep_sum,
    sphere_contains,
)

F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)

ENGINES = ("naive", "bucketed", "lifted")


def decode(q, d, idx):
    coords = []
    for _ in range(d):
        coords.append(idx % q)
        idx //= q
    return tuple(coords)


def random_instance(field, d, seed, max_pts=40, max_sph=40):
    q = field.p
    rng = SplitMix64(seed)
    n = 1 + rng.randbelow(min(q**d, max_pts))
    m = 1 + rng.randbelow(min(q ** (d + 1), max_sph))
    pts = [Point(field, decode(q, d, i)) for i in rng.sample(q**d, n)]
    sph = [
        Sphere(Point(field, decode(q, d, i // q)), i % q)
        for i in rng.sample(q ** (d + 1), m)
    ]
    return PointSet(field, d, pts), SphereFamily(field, d, sph)


def oracle_count(points, spheres):
    # object-level double loop, independent of every kernel
    return sum(
        1 for p in points for s in spheres if sphere_contains(s, p)
    )


def test_pointset_basics():
    ps = PointSet(F5, 2, [(0, 1), (1, 0), Point(F5, (2, 2))])
    assert len(ps) == 3
    assert ps.q == 5
    assert Point(F5, (2, 2)) in ps
    assert ps.flat() == [0, 1, 1, 0, 2, 2]
    assert ps == PointSet(F5, 2, [(2, 2), (0, 1), (1, 0)])


def test_pointset_rejects_duplicates_and_mismatches():
    with pytest.raises(ValueError, match="duplicate"):
        PointSet(F5, 2, [(0, 1), (0, 1)])
    with pytest.raises(ContextMismatchError):
        PointSet(F5, 2, [Point(F7, (0, 1))])
    with pytest.raises(ContextMismatchError):
        PointSet(F5, 2, [(0, 1, 2)])
    with pytest.raises(ValueError):
        PointSet(F5, 0)


def test_spherefamily_basics():
    fam = SphereFamily(F5, 2, [((0, 0), 1), Sphere(Point(F5, (1, 2)), 0)])
    assert len(fam) == 2
    assert fam.flat() == [0, 0, 1, 1, 2, 0]
    with pytest.raises(ValueError, match="duplicate"):
        SphereFamily(F5, 2, [((0, 0), 1), ((0, 0), 1)])
    with pytest.raises(ContextMismatchError):
        SphereFamily(F5, 2, [Sphere(Point(F5, (1, 2, 3)), 0)])


def test_count_unit_circle():
    circle = [(0, 1), (0, 2), (1, 0), (2, 0)]  # x^2 + y^2 = 1 mod 3
    P = PointSet(F3, 2, circle)
    S = SphereFamily(F3, 2, [((0, 0), 1)])
    for engine in ENGINES:
        assert count_incidences(P, S, engine=engine) == 4


def test_count_on_empty_sides():
    P = PointSet(F5, 2)
    S = SphereFamily(F5, 2, [((0, 0), 1)])
    for engine in ENGINES:
        assert count_incidences(P, S, engine=engine) == 0
        assert count_incidences(PointSet(F5, 2, [(1, 1)]), SphereFamily(F5, 2), engine=engine) == 0


def test_count_rejects_unknown_engine_and_mismatch():
    P = PointSet(F5, 2, [(1, 1)])
    S = SphereFamily(F5, 2, [((0, 0), 1)])
    with pytest.raises(ValueError, match="unknown engine"):
        count_incidences(P, S, engine="fast")
    with pytest.raises(ContextMismatchError):
        count_incidences(P, SphereFamily(F7, 2, [((0, 0), 1)]))


@pytest.mark.parametrize("q,d", [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)])
def test_engines_agree_with_object_oracle(q, d):
    field = make_field(q)
    for trial in range(30):
        P, S = random_instance(field, d, seed=trial * 1000 + q * 10 + d)
        expected = oracle_count(P, S)
        for engine in ENGINES:
            assert count_incidences(P, S, engine=engine) == expected


def test_rep_sum_example():
    r = rep_sum([(1,), (2,)], [(0,), (1,)], 3)
    assert r[(0,)] == 1
    assert r[(1,)] == 1
    assert r[(2,)] == 2
    assert r.total() == 4


def test_rep_mass_identity_seeded():
    rng = SplitMix64(99)
    for _ in range(50):
        q = (3, 5, 7)[rng.randbelow(3)]
        k = 1 + rng.randbelow(3)
        total = q**k
        A = [decode(q, k, i) for i in rng.sample(total, 1 + rng.randbelow(min(total, 20)))]
        B = [decode(q, k, i) for i in rng.sample(total, 1 + rng.randbelow(min(total, 20)))]
        assert rep_sum(A, B, q).total() == len(A) * len(B)
        assert rep_diff(A, B, q).total() == len(A) * len(B)


def test_rep_diff_self_is_symmetric():
    A = [(0, 1), (2, 3), (4, 4), (1, 0)]
    r = rep_diff(A, A, 5)
    assert r[(0, 0)] == len(A)
    for x, c in r.items():
        neg = tuple((-v) % 5 for v in x)
        assert r[neg] == c


def test_rep_arity_mismatch():
    with pytest.raises(ContextMismatchError):
        rep_sum([(1, 2)], [(1,)], 5)


def test_energy_full_line_example():
    A = [(0,), (1,), (2,)]
    assert additive_energy(A, A, 3, side="lhs") == 27
    assert additive_energy(A, A, 3, side="rhs") == 27


def test_energy_sides_agree_seeded():
    rng = SplitMix64(123)
    for _ in range(60):
        q = (3, 5, 7)[rng.randbelow(3)]
        k = 1 + rng.randbelow(4)
        total = q**k
        cap = min(total, 24)
        A = [decode(q, k, i) for i in rng.sample(total, 1 + rng.randbelow(cap))]
        B = [decode(q, k, i) for i in rng.sample(total, 1 + rng.randbelow(cap))]
        assert additive_energy(A, B, q, side="lhs") == additive_energy(
            A, B, q, side="rhs"
        )


def test_energy_side_validation():
    with pytest.raises(ValueError):
        additive_energy([(1,)], [(1,)], 3, side="both")


@pytest.mark.parametrize("q,d", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_lifted_diff_count_closed_equals_brute_everywhere(q, d):
    for x in product(range(q), repeat=d + 1):
        assert lifted_diff_count(x, q, d, mode="closed") == lifted_diff_count(
            x, q, d, mode="brute"
        )


def test_lifted_diff_count_cases():
    assert lifted_diff_count((0, 0, 0), 5, 2) == 25
    assert lifted_diff_count((0, 0, 3), 5, 2) == 0
    assert lifted_diff_count((1, 0, 0), 5, 2) == 5
    assert lifted_diff_count((2, 4, 1), 7, 2) == 7
    with pytest.raises(ContextMismatchError):
        lifted_diff_count((1, 2), 5, 2)
    with pytest.raises(ValueError):
        lifted_diff_count((1, 2, 3), 5, 2, mode="guess")


@pytest.mark.parametrize("q,d", [(3, 1), (3, 2), (5, 2)])
def test_lifted_diff_table_matches_per_vector_counts(q, d):
    table = lifted_diff_table(q, d)
    assert len(table) == q ** (d + 1)
    assert sum(table) == q ** (2 * d)  # all ordered pairs accounted for
    for idx, got in enumerate(table):
        # index is big-endian base q
        digits = []
        rem = idx
        for _ in range(d + 1):
            digits.append(rem % q)
            rem //= q
        x = tuple(reversed(digits))
        assert got == lifted_diff_count(x, q, d, mode="brute")
