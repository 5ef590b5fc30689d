"""Tests for exact linear algebra and jets."""

from fractions import Fraction

import pytest
import sympy

from assoform.algebra.apolar import catalecticant
from assoform.core.exactla import (
    ExactMatrix, JetScalar, det, jet_rank_matrix, jet_solve, kernel_basis, naive_rank,
    rank, rref, same_span, solve,
)
from assoform.errors import NoSolution


def _random_matrix(rng, rows, cols, height=3):
    return ExactMatrix.from_rows(
        [[Fraction(int(rng.integers(-height, height + 1)), int(rng.integers(1, 4))) for _ in range(cols)]
         for _ in range(rows)],
        cols=cols,
    )


class TestRank:
    def test_zero_matrix(self):
        assert rank(ExactMatrix.zeros(3, 5)) == 0

    def test_identity(self):
        assert rank(ExactMatrix.identity(4)) == 4

    def test_single_row(self):
        assert rank(ExactMatrix.from_rows([[0, 1, 0]])) == 1

    def test_matches_the_jet_reduction(self, rng):
        for _ in range(200):
            r, c = (int(v) for v in rng.integers(1, 9, size=2))
            M = _random_matrix(rng, r, c)
            if rng.integers(0, 3) == 0 and r > 1:
                # force a dependent row
                rows = M.to_lists()
                rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % r])]
                M = ExactMatrix.from_rows(rows, cols=c)
            assert rank(M) == naive_rank(M)

    def test_matches_sympy(self, rng):
        for _ in range(20):
            M = _random_matrix(rng, 4, 6, height=1)
            assert rank(M) == sympy.Matrix(M.to_lists()).rank()


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(ExactMatrix.identity(3)) == []

    def test_single_row(self):
        assert kernel_basis(ExactMatrix.from_rows([[0, 1, 0]])) == [[1, 0, 0], [0, 0, 1]]

    def test_catalecticant_of_a_cube(self, yform):
        D = catalecticant(yform("y1^3", 3), 2).matrix
        assert len(kernel_basis(D)) == 5

    def test_rank_nullity_and_annihilation(self, rng):
        for _ in range(50):
            M = _random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(1, 8)), height=1)
            basis = kernel_basis(M)
            assert rank(M) + len(basis) == M.cols
            for v in basis:
                assert all(x == 0 for x in M.apply(v))

    def test_rref_pivots(self):
        reduced, pivots = rref(ExactMatrix.from_rows([[2, 4, 0], [1, 2, 1]]))
        assert pivots == [0, 2]
        assert reduced.row(0) == (1, 2, 0)


class TestSolveAndDet:
    def test_identity_solve(self):
        assert solve(ExactMatrix.identity(3), [1, 2, 3]) == [1, 2, 3]

    def test_underdetermined_sets_free_variables_to_zero(self):
        assert solve(ExactMatrix.from_rows([[1, 1]]), [2]) == [2, 0]

    def test_inconsistent(self):
        with pytest.raises(NoSolution):
            solve(ExactMatrix.from_rows([[1, 1], [2, 2]]), [1, 3])

    def test_det_diagonal(self):
        assert det(ExactMatrix.diagonal([2, 3])) == 6

    def test_det_fractions(self):
        assert det(ExactMatrix.from_rows([[Fraction(1, 2), 1], [1, 4]])) == 1

    def test_det_matches_sympy(self, rng):
        for _ in range(30):
            M = _random_matrix(rng, 5, 5)
            assert det(M) == Fraction(str(sympy.Matrix(M.to_lists()).det()))

    def test_det_requires_square(self):
        with pytest.raises(ValueError):
            det(ExactMatrix.zeros(2, 3))

    def test_empty_matrices(self):
        assert det(ExactMatrix.zeros(0, 0)) == 1
        assert rank(ExactMatrix.zeros(0, 3)) == 0
        assert kernel_basis(ExactMatrix.zeros(0, 2)) == [[1, 0], [0, 1]]

    def test_inverse(self):
        M = ExactMatrix.from_rows([[2, 1], [1, 1]])
        assert M @ M.inverse() == ExactMatrix.identity(2)


class TestJets:
    def test_arithmetic(self):
        a = JetScalar(Fraction(2), Fraction(1))
        assert a * a == JetScalar(4, 4)
        assert 1 / a == JetScalar(Fraction(1, 2), Fraction(-1, 4))
        assert a - 2 == JetScalar(0, 1)

    def test_division_by_pure_eps(self):
        with pytest.raises(ZeroDivisionError):
            JetScalar(1) / JetScalar(0, 1)

    def test_chain_rule_against_sympy(self, rng):
        x = sympy.Symbol("x")
        for _ in range(50):
            coeffs = [Fraction(int(c)) for c in rng.integers(-5, 6, size=5)]
            a = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
            value = JetScalar(0)
            for c in reversed(coeffs):
                value = value * JetScalar(a, 1) + c
            p = sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(coeffs))
            expected = sympy.diff(p, x).subs(x, sympy.Rational(a.numerator, a.denominator))
            assert value.deriv == Fraction(str(expected))

    def test_jet_solve_gives_first_order_variation(self):
        # (A + eps B) v = b with A = I, B = [[0, 1], [0, 0]], b = (1, 1): v = (1, 1), v' = -B v
        rows = [[JetScalar(1), JetScalar(0, 1)], [JetScalar(0), JetScalar(1)]]
        v = jet_solve(rows, [JetScalar(1), JetScalar(1)])
        assert v == [JetScalar(1, -1), JetScalar(1, 0)]

    def test_jet_solve_overdetermined_consistent(self):
        rows = [[JetScalar(1)], [JetScalar(0, 1)]]
        assert jet_solve(rows, [JetScalar(1), JetScalar(0, 1)]) == [JetScalar(1, 0)]

    def test_jet_solve_rejects_first_order_inconsistency(self):
        # x = 1 forces eps*x = eps, not 0
        rows = [[JetScalar(1)], [JetScalar(0, 1)]]
        with pytest.raises(NoSolution):
            jet_solve(rows, [JetScalar(1), JetScalar(0)])

    def test_jet_solve_rejects_value_inconsistency(self):
        rows = [[JetScalar(1)], [JetScalar(1)]]
        with pytest.raises(NoSolution):
            jet_solve(rows, [JetScalar(1), JetScalar(2)])

    def test_jet_rank_uses_eps_part(self):
        M = [[JetScalar(1, 1), JetScalar(0, 2)], [JetScalar(5, 2), JetScalar(0, 4)]]
        assert jet_rank_matrix(M) == 1


def test_same_span():
    assert same_span([[1, 0], [0, 1]], [[1, 1], [1, -1]], 2)
    assert not same_span([[1, 0]], [[0, 1]], 2)
