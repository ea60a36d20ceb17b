"""Unit tests for the exact linear algebra layer."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphalg.exact_algebra import (
    DivisibleKernelError,
    ExactMatrix,
    Mod,
    ModuleDecomposition,
    charpoly,
    cokernel,
    determinant,
    kernel_QmodZ_torsion,
    kernel_mod_n,
    poly_divides,
    rank_over_Q,
    snf,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


class TestMod:
    def test_arithmetic(self):
        a = Mod(4, 7)
        b = Mod(5, 7)
        assert a + b == Mod(2, 7)
        assert a - b == Mod(6, 7)
        assert a * b == Mod(6, 7)
        assert -a == Mod(3, 7)
        assert 2 * a == Mod(1, 7)

    def test_fraction_coercion_uses_modular_inverse(self):
        assert Mod(Fraction(1, 2), 5) == Mod(3, 5)
        assert Mod(Fraction(2, 3), 7) == Mod(3, 7)

    def test_noninvertible_denominator_rejected(self):
        with pytest.raises((ValueError, ZeroDivisionError)):
            Mod(Fraction(1, 2), 4)

    def test_truthiness_and_int_comparison(self):
        assert not Mod(0, 6)
        assert Mod(3, 6)
        assert Mod(5, 6) == -1


class TestModuleDecomposition:
    def test_from_cyclic_orders_chains_factors(self):
        d = ModuleDecomposition.from_cyclic_orders((6, 4))
        assert d.invariant_factors == (2, 12)
        assert d.torsion_order == 24

    def test_zero_order_counts_as_free(self):
        d = ModuleDecomposition.from_cyclic_orders((0, 3, 0))
        assert d.free_rank == 2
        assert d.invariant_factors == (3,)

    def test_str(self):
        assert str(ModuleDecomposition(2, (3, 15))) == "Z^2 + Z/3 + Z/15"
        assert str(ModuleDecomposition(1, ())) == "Z"
        assert str(ModuleDecomposition(0, ())) == "0"


class TestSnf:
    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_snf_relation_and_divisibility(self, rows):
        A = ExactMatrix(rows)
        result = snf(A)
        assert result.U * A * result.V == result.S
        assert abs(determinant(result.U)) == 1
        assert abs(determinant(result.V)) == 1
        diag = result.diagonal
        assert all(d >= 0 for d in diag)
        nonzero = [d for d in diag if d]
        assert len(nonzero) == result.rank == rank_over_Q(A)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        # off-diagonal entries vanish
        for i in range(result.S.rows):
            for j in range(result.S.cols):
                if i != j:
                    assert result.S[i, j] == 0

    def test_known_diagonal(self):
        A = ExactMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        assert snf(A).diagonal == (2, 2, 156)


class TestCokernel:
    def test_diagonal_presentation(self):
        assert cokernel(ExactMatrix.diagonal([2, 4])) == ModuleDecomposition(
            0, (2, 4)
        )

    def test_non_diagonal_presentation(self):
        # [[2, 1], [0, 2]] presents Z/4, not Z/2 + Z/2
        assert cokernel(ExactMatrix([[2, 1], [0, 2]])) == ModuleDecomposition(
            0, (4,)
        )

    def test_free_part(self):
        A = ExactMatrix([[1, 1], [1, 1], [0, 3]])
        d = cokernel(A)
        assert d.free_rank == 1


class TestKernelModN:
    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_matches_brute_force_count(self, n):
        mats = [
            [[1, 2], [3, 4]],
            [[2, 0], [0, 2]],
            [[6, 3, 1]],
            [[2, 4], [4, 8], [0, 0]],
        ]
        for rows in mats:
            A = ExactMatrix(rows)
            count = 0
            for vec in product(range(n), repeat=A.cols):
                img = [
                    sum(A[i, j] * vec[j] for j in range(A.cols)) % n
                    for i in range(A.rows)
                ]
                if not any(img):
                    count += 1
            assert kernel_mod_n(A, n).torsion_order == count

    def test_zero_matrix(self):
        A = ExactMatrix.zeros(2, 2)
        assert kernel_mod_n(A, 4) == ModuleDecomposition.from_cyclic_orders(
            (4, 4)
        )


class TestKernelQmodZ:
    def test_diagonal(self):
        A = ExactMatrix.diagonal([3, 15])
        assert kernel_QmodZ_torsion(A) == ModuleDecomposition(0, (3, 15))

    def test_column_rank_deficiency_raises(self):
        with pytest.raises(DivisibleKernelError):
            kernel_QmodZ_torsion(ExactMatrix([[1, 1], [2, 2]]))

    def test_agrees_with_transpose_cokernel(self):
        A = ExactMatrix([[2, 1], [0, 6], [4, 4]])
        assert (
            kernel_QmodZ_torsion(A).invariant_factors
            == cokernel(A.transpose()).invariant_factors
        )


class TestCharpolyAndDeterminant:
    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(-6, 6), min_size=3, max_size=3),
            min_size=3,
            max_size=3,
        )
    )
    def test_charpoly_matches_sympy(self, rows):
        import sympy

        A = ExactMatrix(rows)
        got = charpoly(A)
        want = sympy.Matrix(rows).charpoly().all_coeffs()
        assert [int(c) for c in got] == [int(c) for c in want]

    def test_determinant_is_constant_term_sign(self):
        A = ExactMatrix([[1, 2], [3, 4]])
        assert determinant(A) == -2
        # constant term of det(zI - A) is (-1)^n det(A)
        assert charpoly(A)[-1] == (-1) ** A.rows * determinant(A)

    def test_fraction_determinant(self):
        A = ExactMatrix([[Fraction(1, 2), 1], [1, Fraction(1, 2)]])
        assert determinant(A) == Fraction(-3, 4)


class TestPolyDivides:
    def test_divides(self):
        # (z - 1)(z + 2) = z^2 + z - 2
        assert poly_divides([1, -1], [1, 1, -2])
        assert poly_divides([1, 2], [1, 1, -2])
        assert not poly_divides([1, 1], [1, 1, -2])


class TestExactMatrixOps:
    def test_immutability(self):
        A = ExactMatrix.identity(2)
        with pytest.raises(AttributeError):
            A.rows = 3

    def test_apply_on_mod_vector(self):
        A = ExactMatrix([[1, 2], [3, 4]])
        out = A.apply([Mod(1, 5), Mod(2, 5)])
        assert out == [Mod(0, 5), Mod(1, 5)]

    def test_stacking(self):
        A = ExactMatrix.identity(2)
        assert A.hstack(A).cols == 4
        assert A.vstack(A).rows == 4

    def test_submatrix(self):
        A = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert A.submatrix([0, 2], [1]) == ExactMatrix([[2], [8]])
