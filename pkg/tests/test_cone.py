import random
from fractions import Fraction

import pytest
from corpus import random_unimodular
from oracles import brute_intersection_rays, lp_contains, supported_face_subsets
from toricfan import cone
from toricfan.errors import DependentGenerators, MalformedInput, NotUnimodular


def table(*rays):
    return cone.make_table(rays)


STD2 = table((1, 0), (0, 1))
CP2 = table((1, 0), (0, 1), (-1, -1))


class TestMakeCone:
    def test_standard_quadrant(self):
        c = cone.make_cone(STD2, (0, 1))
        assert c.dim == 2 and c.ambient_dim == 2

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            cone.make_cone(table((1, 0), (1, 2)), (0, 1))

    def test_zero_cone(self):
        c = cone.make_cone(STD2, ())
        assert c.dim == 0 and c.generators == ()

    def test_rejects_dependent(self):
        with pytest.raises(DependentGenerators):
            cone.make_cone(table((1, 0), (-1, 0)), (0, 1))

    def test_rejects_bad_index(self):
        with pytest.raises(MalformedInput):
            cone.make_cone(STD2, (0, 7))

    def test_rejects_duplicate_index(self):
        with pytest.raises(MalformedInput):
            cone.make_cone(STD2, (0, 0))


class TestFaces:
    def test_two_dim(self):
        c = cone.make_cone(STD2, (0, 1))
        got = {f.indices for f in cone.faces(c)}
        assert got == {(), (0,), (1,), (0, 1)}

    def test_zero_cone(self):
        c = cone.make_cone(STD2, ())
        assert {f.indices for f in cone.faces(c)} == {()}

    def test_three_dim_has_eight(self):
        t = table((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert len(cone.faces(cone.make_cone(t, (0, 1, 2)))) == 8

    @pytest.mark.parametrize(
        "rays,indices",
        [
            (((1, 0), (0, 1)), (0, 1)),
            (((0, 1), (-1, -1)), (0, 1)),
            (((1, 2), (1, 1)), (0, 1)),
            (((1, 0, 0), (0, 1, 0), (1, 1, 1)), (0, 1, 2)),
            (((2, 1, 0), (1, 1, 0)), (0, 1)),
        ],
    )
    def test_matches_supporting_hyperplane_enumeration(self, rays, indices):
        t = table(*rays)
        c = cone.Cone(t, tuple(sorted(indices)))
        got = {tuple(sorted(c.indices.index(i) for i in f.indices))
               for f in cone.faces(c)}
        oracle = supported_face_subsets(c.generators, c.ambient_dim)
        assert got == oracle


class TestContains:
    def test_quadrant_inside(self):
        c = cone.make_cone(STD2, (0, 1))
        assert cone.contains(c, (3, 5))

    def test_quadrant_outside(self):
        c = cone.make_cone(STD2, (0, 1))
        assert not cone.contains(c, (-1, 2))

    def test_exact_solve_on_skew_cone(self):
        # coefficients solve exactly: (1,-1) = 1*(-1,-1) + 2*(1,0)
        c = cone.make_cone(CP2, (0, 2))
        assert cone.contains(c, (1, -1))

    def test_rational_vectors(self):
        c = cone.make_cone(STD2, (0, 1))
        assert cone.contains(c, (Fraction(1, 3), Fraction(7, 2)))
        assert not cone.contains(c, (Fraction(-1, 5), Fraction(1)))

    def test_lower_dimensional_cone(self):
        c = cone.make_cone(STD2, (0,))
        assert cone.contains(c, (4, 0))
        assert not cone.contains(c, (4, 1))

    def test_zero_cone(self):
        c = cone.make_cone(STD2, ())
        assert cone.contains(c, (0, 0))
        assert not cone.contains(c, (1, 0))


class TestRelativeInterior:
    def test_interior_point(self):
        c = cone.make_cone(STD2, (0, 1))
        assert cone.relative_interior_contains(c, (1, 1))

    def test_boundary_point(self):
        c = cone.make_cone(STD2, (0, 1))
        assert not cone.relative_interior_contains(c, (1, 0))

    def test_skew_cone_interior(self):
        # (-1,0) = 1*(0,1) + 1*(-1,-1), both coefficients positive
        c = cone.make_cone(table((0, 1), (-1, -1)), (0, 1))
        assert cone.relative_interior_contains(c, (-1, 0))

    def test_implies_containment(self):
        rng = random.Random(5)
        for _ in range(30):
            g = random_unimodular(3, rng)
            k = rng.randint(1, 3)
            t = cone.make_table(g[:k], 3)
            c = cone.make_cone(t, range(k))
            v = tuple(rng.randint(-4, 4) for _ in range(3))
            if cone.relative_interior_contains(c, v):
                assert cone.contains(c, v)

    def test_unique_face_partition(self):
        c = cone.make_cone(CP2, (1, 2))
        rng = random.Random(9)
        for _ in range(40):
            a, b = rng.randint(0, 5), rng.randint(0, 5)
            v = tuple(a * x + b * y for x, y in zip((0, 1), (-1, -1)))
            hits = [f for f in cone.faces(c) if cone.relative_interior_contains(f, v)]
            assert len(hits) == 1
            assert cone.contains(c, v)


class TestIntersect:
    def test_shared_ray(self):
        c1 = cone.make_cone(CP2, (0, 1))
        c2 = cone.make_cone(CP2, (1, 2))
        assert cone.intersect(c1, c2) == ((0, 1),)

    def test_self_intersection(self):
        c = cone.make_cone(CP2, (1, 2))
        assert set(cone.intersect(c, c)) == {(0, 1), (-1, -1)}

    def test_non_face_overlap(self):
        # the canonical intersection-axiom violation witness: the second
        # cone sits inside the first, so the intersection is not a face
        t = table((1, 0), (0, 1), (1, 1))
        c1 = cone.make_cone(t, (0, 1))
        c2 = cone.make_cone(t, (0, 2))
        assert set(cone.intersect(c1, c2)) == {(1, 0), (1, 1)}

    def test_commutative(self):
        c1 = cone.make_cone(CP2, (0, 1))
        c2 = cone.make_cone(CP2, (2,))
        assert cone.intersect(c1, c2) == cone.intersect(c2, c1) == ()

    def test_face_intersection_is_face(self):
        c = cone.make_cone(CP2, (0, 1))
        for f in cone.faces(c):
            assert set(cone.intersect(c, f)) == set(f.generators)

    def test_zero_cone(self):
        c1 = cone.make_cone(STD2, ())
        c2 = cone.make_cone(STD2, (0, 1))
        assert cone.intersect(c1, c2) == ()

    def test_table_mismatch(self):
        with pytest.raises(MalformedInput):
            cone.intersect(cone.make_cone(STD2, (0,)), cone.make_cone(CP2, (0,)))

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_tight_subset_enumeration(self, seed):
        rng = random.Random(seed)
        n = rng.choice((2, 2, 3))
        g1 = random_unimodular(n, rng)[: rng.randint(1, n)]
        g2 = random_unimodular(n, rng)[: rng.randint(1, n)]
        got = set(cone.intersect_generators(g1, g2, n))
        assert got == brute_intersection_rays(g1, g2, n)
        assert got == set(cone.intersect_generators(g2, g1, n))

    def test_opposite_halfplanes_meet_in_line_boundary(self):
        # two cones meeting along a full line would not be pointed; make
        # sure genuinely touching cones still work
        t = table((1, 0), (0, 1), (-1, 0))
        c1 = cone.make_cone(t, (0, 1))
        c2 = cone.make_cone(t, (1, 2))
        assert cone.intersect(c1, c2) == ((0, 1),)


class TestContainsAgainstLp:
    @pytest.mark.parametrize("seed", range(20))
    def test_random_unimodular_cones(self, seed):
        rng = random.Random(100 + seed)
        n = rng.choice((2, 3))
        g = random_unimodular(n, rng, ops=6)
        if any(abs(x) > 4 for row in g for x in row):
            return  # stay inside the small-entry corpus
        k = rng.randint(1, n)
        t = cone.make_table(g[:k], n)
        c = cone.make_cone(t, range(k))
        for _ in range(25):
            v = tuple(rng.randint(-6, 6) for _ in range(n))
            assert cone.contains(c, v) == lp_contains(c.generators, v, n)
