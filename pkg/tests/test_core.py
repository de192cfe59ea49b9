from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from fiqs import IntMatrix, SmithForm, det3, gcd_list, lcm2, smith_normal_form, solve3


def det_by_permutation_expansion(m: IntMatrix) -> int:
    """Independent reference: sum over permutations of signed products."""
    n = m.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i, perm[i]]
        total += sign * prod
    return total


def minors_gcd(m: IntMatrix, k: int) -> int:
    """gcd of all k x k minors (0 if all vanish)."""
    g = 0
    for rows in itertools.combinations(range(m.rows), k):
        for cols in itertools.combinations(range(m.cols), k):
            sub = IntMatrix.from_rows([[m[i, j] for j in cols] for i in rows])
            g = gcd(g, det_by_permutation_expansion(sub))
    return g


class TestGcdLcm:
    def test_gcd_pair(self):
        assert gcd_list([2, 2]) == 2

    def test_gcd_all_zero(self):
        assert gcd_list([0, 0]) == 0

    def test_gcd_formula_values(self):
        # gcd(2a+1, a-b, -c) at (a, b, c) = (1, 0, -2)
        assert gcd_list([3, 1, -2]) == 1

    def test_gcd_empty_rejected(self):
        with pytest.raises(ValueError):
            gcd_list([])

    def test_lcm(self):
        assert lcm2(1, 1) == 1
        assert lcm2(1, 4) == 4
        assert lcm2(6, 4) == 12

    def test_lcm_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            lcm2(0, 3)
        with pytest.raises(ValueError):
            lcm2(2, -1)


class TestDet3:
    def test_identity(self):
        assert det3(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1

    def test_sigma_plus_cone(self):
        # columns v1, v3, v4 at rho=1, a=0: determinant 4 = 4a+4
        m = IntMatrix.from_columns([(-1, -1, 0), (2, 0, 1), (0, 2, 1)])
        assert det3(m) == 4
        assert det_by_permutation_expansion(m) == 4

    def test_sigma_minus_cone(self):
        # columns v2, v3, v4 at rho=1, b=-2: determinant 4b+4 = -4, the
        # local class group order is its absolute value 4 = -4b-4
        m = IntMatrix.from_columns([(-1, -1, -2), (2, 0, 1), (0, 2, 1)])
        assert det3(m) == -4
        assert det_by_permutation_expansion(m) == -4

    def test_wrong_shape_rejected(self):
        with pytest.raises(ValueError):
            det3(IntMatrix.from_rows([[1, 0], [0, 1]]))

    def test_against_permutation_expansion(self):
        rng = random.Random(7)
        for _ in range(200):
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            )
            assert det3(m) == det_by_permutation_expansion(m)


class TestSmith:
    def test_zero_matrix(self):
        snf = smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]]))
        assert snf.invariant_factors == (0, 0)
        assert snf.rank == 0

    def test_already_diagonal(self):
        snf = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 6]]))
        assert snf.invariant_factors == (2, 6)

    def test_class_group_presentation(self):
        # P^T for rho=1, (a, b) = (0, -2): cokernel Z^4/im(P^T) = Z x Z/4
        p = IntMatrix.from_rows([[-1, -1, 2, 0], [-1, -1, 0, 2], [0, -2, 1, 1]])
        snf = smith_normal_form(p.transpose())
        assert snf.invariant_factors == (1, 1, 4)
        assert snf.rank == 3

    def test_divisibility_chain_enforced(self):
        with pytest.raises(ValueError):
            SmithForm((2, 3), 2)
        with pytest.raises(ValueError):
            SmithForm((0, 2), 1)

    def test_random_matrices_against_minor_gcds(self):
        # d1 * ... * dk equals the gcd of all k x k minors
        rng = random.Random(11)
        for _ in range(120):
            nr, nc = rng.choice([(3, 3), (4, 3), (3, 4), (2, 3)])
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
            )
            snf = smith_normal_form(m)
            fac = snf.invariant_factors
            for x, y in zip(fac, fac[1:]):
                assert (x == 0 and y == 0) or y % x == 0
            prod = 1
            for k, f in enumerate(fac, start=1):
                prod *= f
                assert prod == minors_gcd(m, k)

    def test_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        from sympy.matrices.normalforms import invariant_factors

        rng = random.Random(13)
        for _ in range(60):
            nr, nc = rng.choice([(3, 3), (4, 3), (5, 3)])
            rows = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
            ours = smith_normal_form(IntMatrix.from_rows(rows))
            theirs = [int(f) for f in invariant_factors(sympy.Matrix(rows))]
            nonzero = [f for f in ours.invariant_factors if f != 0]
            assert nonzero == [abs(f) for f in theirs if f != 0]


class TestSolve3:
    def test_identity(self):
        m = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert solve3(m, (1, 2, 3)) == (1, 2, 3)

    def test_cartier_form_at_x_plus(self):
        # rho=1, a=0: the anticanonical form on sigma+ is already integral
        m = IntMatrix.from_columns([(-1, -1, 0), (2, 0, 1), (0, 2, 1)])
        assert solve3(m, (0, 1, 1)) == (0, 0, 1)

    def test_cartier_form_at_x_minus(self):
        # rho=1, b=-2: integral solution, so the local index is 1
        m = IntMatrix.from_columns([(-1, -1, -2), (2, 0, 1), (0, 2, 1)])
        u = solve3(m, (0, 1, 1))
        assert all(f.denominator == 1 for f in u)
        for j in range(3):
            col = m.column(j)
            assert sum(ui * vi for ui, vi in zip(u, col)) == (0, 1, 1)[j]

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            solve3(IntMatrix.from_rows([[1, 1, 1], [1, 1, 1], [0, 0, 1]]), (1, 1, 1))

    @given(
        st.lists(st.integers(-9, 9), min_size=9, max_size=9),
        st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
    )
    def test_substitution_recovers_rhs(self, entries, rhs):
        m = IntMatrix(3, 3, tuple(entries))
        if det3(m) == 0:
            return
        u = solve3(m, rhs)
        for j in range(3):
            col = m.column(j)
            assert sum(ui * vi for ui, vi in zip(u, col)) == rhs[j]


_fractions = st.fractions(
    min_value=-(10**6), max_value=10**6, max_denominator=10**4
)


class TestRationalArithmetic:
    @given(_fractions, _fractions)
    def test_add_sub_roundtrip(self, x, y):
        assert (x + y) - y == x

    @given(_fractions)
    def test_multiplicative_inverse(self, x):
        if x != 0:
            assert x * (1 / x) == 1

    @given(_fractions, _fractions)
    def test_total_order(self, x, y):
        assert (x < y) + (x == y) + (x > y) == 1

    def test_stored_reduced_with_positive_denominator(self):
        q = Fraction(6, -4)
        assert q.numerator == -3 and q.denominator == 2

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1, 2) / 0
