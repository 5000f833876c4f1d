import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_unimodular
from oracles import brute_extends_to_basis, perm_det
from toricfan import lattice
from toricfan.errors import NotUnimodular, ZeroVector

matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
        min_size=1,
        max_size=4,
    )
)


def is_hnf_shape(h):
    pivots = []
    for row in h:
        cols = [j for j, x in enumerate(row) if x]
        pivots.append(cols[0] if cols else None)
    # zero rows at the bottom, pivot columns strictly increasing
    nonzero = [p for p in pivots if p is not None]
    assert nonzero == sorted(nonzero) and len(set(nonzero)) == len(nonzero)
    if any(p is None for p in pivots):
        first_zero = pivots.index(None)
        assert all(p is None for p in pivots[first_zero:])
    for r, p in enumerate(pivots):
        if p is None:
            continue
        assert h[r][p] > 0
        for above in range(r):
            assert 0 <= h[above][p] < h[r][p]
    return True


class TestPrimitive:
    def test_gcd_division(self):
        assert lattice.primitive((2, 4)) == (1, 2)

    def test_already_primitive(self):
        assert lattice.primitive((1, 0)) == (1, 0)

    def test_sign_preserved(self):
        # gcd is 3 and the direction must not flip
        assert lattice.primitive((-3, 6, -9)) == (-1, 2, -3)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            lattice.primitive((0, 0))

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=5))
    def test_properties(self, entries):
        if not any(entries):
            return
        p = lattice.primitive(entries)
        from math import gcd
        g = gcd(*entries)
        assert gcd(*p) == 1
        assert tuple(x * g for x in p) == tuple(entries)


class TestHnf:
    def test_pinned_example(self):
        h, u = lattice.hnf([[2, 4], [1, 3]])
        assert lattice.mat_mul(u, ((2, 4), (1, 3))) == h
        assert lattice.det(u) in (1, -1)
        # canonical reduced form: entry above the pivot 2 lies in [0, 2)
        assert h == ((1, 1), (0, 2))

    def test_identity(self):
        h, u = lattice.hnf(lattice.identity(3))
        assert h == lattice.identity(3)
        assert u == lattice.identity(3)

    def test_row_swap(self):
        h, u = lattice.hnf([[0, 1], [1, 0]])
        assert h == lattice.identity(2)
        assert lattice.det(u) == -1

    @given(matrices)
    @settings(max_examples=150)
    def test_invariants(self, rows):
        m = lattice.mat(rows)
        h, u = lattice.hnf(m)
        assert lattice.mat_mul(u, m) == h
        assert lattice.det(u) in (1, -1)
        assert is_hnf_shape(h)


class TestSnf:
    def test_pinned_example(self):
        s, u, v = lattice.snf([[2, 0], [0, 3]])
        assert s == ((1, 0), (0, 6))

    def test_identity(self):
        s, u, v = lattice.snf(lattice.identity(2))
        assert s == lattice.identity(2)

    def test_tall_matrix(self):
        s, _, _ = lattice.snf([[1, 0], [0, 1], [-1, -1]])
        assert s == ((1, 0), (0, 1), (0, 0))

    @given(matrices)
    @settings(max_examples=150)
    def test_invariants(self, rows):
        m = lattice.mat(rows)
        s, u, v = lattice.snf(m)
        assert lattice.mat_mul(lattice.mat_mul(u, m), v) == s
        assert lattice.det(u) in (1, -1)
        assert lattice.det(v) in (1, -1)
        k = min(len(s), len(s[0]))
        diag = [s[i][i] for i in range(k)]
        for i, row in enumerate(s):
            for j, x in enumerate(row):
                assert x == 0 or i == j
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and b >= 0
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0


class TestDualBasis:
    def test_standard(self):
        assert lattice.dual_basis(((1, 0), (0, 1))) == ((1, 0), (0, 1))

    def test_pinned_pair(self):
        assert lattice.dual_basis(((0, 1), (-1, -1))) == ((-1, 1), (-1, 0))

    def test_pinned_pair_other_chart(self):
        assert lattice.dual_basis(((-1, -1), (1, 0))) == ((0, -1), (1, -1))

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            lattice.dual_basis(((1, 0), (1, 2)))

    @given(st.integers(1, 4), st.integers(0, 10 ** 6))
    @settings(max_examples=80)
    def test_pairing_and_round_trip(self, n, seed):
        g = random_unimodular(n, random.Random(seed))
        a = lattice.dual_basis(g)
        assert lattice.mat_mul(a, lattice.transpose(g)) == lattice.identity(n)
        assert lattice.dual_basis(a) == g


class TestIsPartOfBasis:
    def test_coprime_row(self):
        assert lattice.is_part_of_basis([(2, 3)]) is True

    def test_non_primitive_row(self):
        assert lattice.is_part_of_basis([(2, 4)]) is False

    def test_index_two_pair(self):
        assert lattice.is_part_of_basis([(1, 0), (1, 2)]) is False

    def test_too_many_rows(self):
        assert lattice.is_part_of_basis([(1, 0), (0, 1), (1, 1)]) is False

    CASES = [
        [(2, 3)],
        [(2, 4)],
        [(1, 0), (1, 2)],
        [(0, 1)],
        [(3, 5)],
        [(1, 1), (0, 1)],
        [(2, 1), (1, 1)],
        [(2, 2)],
        [(1, 2, 3)],
        [(2, 4, 6)],
        [(1, 0, 0), (0, 1, 0)],
        [(1, 2, 2), (0, 1, 1)],
        [(0, 2, 1), (1, 1, 1)],
        [(2, 0, 0), (0, 1, 0)],
        [(1, 1, 0), (1, -1, 0)],
        [(1, 0, 0), (0, 1, 0), (0, 0, 2)],
        [(1, 0, 0), (0, 1, 1), (0, 1, -1)],
        [(2, 1, 0), (1, 1, 0), (0, 0, 1)],
    ]

    @pytest.mark.parametrize("rows", CASES)
    def test_against_brute_force_extension_search(self, rows):
        n = len(rows[0])
        assert lattice.is_part_of_basis(rows) == brute_extends_to_basis(rows, n)


class TestDet:
    @given(st.integers(1, 4), st.data())
    @settings(max_examples=100)
    def test_matches_permutation_expansion(self, n, data):
        rows = data.draw(
            st.lists(
                st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
        assert lattice.det(rows) == perm_det(rows)


class TestKernel:
    def test_integer_kernel_is_saturated(self):
        basis = lattice.integer_kernel_basis(((1, 1, 1),))
        assert len(basis) == 2
        for k in basis:
            assert sum(k) == 0
        assert all(f == 1 for f in lattice.invariant_factors(basis))

    def test_trivial_kernel(self):
        assert lattice.integer_kernel_basis(lattice.identity(3)) == ()
