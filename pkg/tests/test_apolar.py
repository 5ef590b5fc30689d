"""Tests for the polar pairing and catalecticant matrices."""

from fractions import Fraction

import pytest

from assoform.algebra.apolar import (
    annihilator_piece, catalecticant, gorenstein_sequence, pairing_matrix, polar_pair, span_equal,
)
from assoform.core.exactla import ExactMatrix
from assoform.core.polyring import GradedForm, Side, substitute
from assoform.errors import DegreeError, PreconditionError
from assoform.verification.sampler import inverse_transpose, random_form, random_invertible_matrix


class TestPolarPair:
    def test_derivative_of_a_cube(self, xform, yform):
        assert polar_pair(xform("x1", 3), yform("y1^3", 3)) == yform("3*y1^2", 3)

    def test_mixed_operator(self, xform, yform):
        assert polar_pair(xform("x1*x2", 3), yform("y1*y2*y3", 3)) == yform("y3", 3)

    def test_full_contraction_is_alpha_factorial(self, xform, yform):
        out = polar_pair(xform("x1^2*x2", 2), yform("y1^2*y2", 2))
        assert out == GradedForm.monomial(Side.Y, (0, 0), 2)

    def test_operator_of_too_high_degree(self, xform, yform):
        with pytest.raises(DegreeError):
            polar_pair(xform("x1^3", 2), yform("y1^2", 2))

    def test_contraction_identity(self, rng):
        for _ in range(20):
            F = random_form(rng, Side.Y, 3, 4, height=4)
            h = random_form(rng, Side.X, 3, 2, height=4)
            for i in range(3):
                xi = GradedForm.variable(Side.X, 3, i)
                assert polar_pair(xi * h, F) == polar_pair(h, polar_pair(xi, F))


class TestCatalecticant:
    def test_binary_quadric(self, yform):
        D = catalecticant(yform("y1^2 + 2*y1*y2 + 3*y2^2", 2), 2).matrix
        assert D == ExactMatrix.from_rows([[2, 2, 6]])

    def test_ternary_cubic_shape(self, yform):
        D = catalecticant(yform("y1*y2*y3", 3), 2).matrix
        assert (D.rows, D.cols) == (3, 6)

    def test_degree_zero_column_is_the_coefficient_vector(self, rng):
        F = random_form(rng, Side.Y, 3, 3)
        assert list(catalecticant(F, 0).matrix.column(0)) == F.vector()

    def test_rejects_x_side(self, xform):
        with pytest.raises(DegreeError):
            catalecticant(xform("x1^2", 2), 1)


class TestAnnihilator:
    def test_cubic_in_two_monomials(self, xform, yform):
        F = yform("y1^2*y3 + y2*y3^2", 3)
        expected = [xform("x1*x2", 3), xform("x2^2", 3), xform("x1^2 - x2*x3", 3)]
        assert span_equal(annihilator_piece(F, 2), expected)

    def test_monomial_cube(self, yform):
        assert len(annihilator_piece(yform("y1^3", 3), 2)) == 5

    def test_forms_annihilate(self, rng):
        F = random_form(rng, Side.Y, 3, 4, height=3)
        for h in annihilator_piece(F, 3):
            assert polar_pair(h, F).is_zero()

    def test_change_of_variables(self, rng):
        for _ in range(10):
            F = random_form(rng, Side.Y, 3, 3, height=3)
            C = random_invertible_matrix(rng, 3)
            moved = annihilator_piece(substitute(F, C), 2)
            expected = [h.substitute(inverse_transpose(C)) for h in annihilator_piece(F, 2)]
            assert span_equal(moved, expected, n=3, degree=2)


class TestGorensteinSequence:
    def test_product_of_variables(self, yform):
        assert gorenstein_sequence(yform("y1*y2*y3", 3)) == [1, 3, 3, 1]

    def test_cube(self, yform):
        assert gorenstein_sequence(yform("y1^3", 3)) == [1, 1, 1, 1]

    def test_binary_quartic(self, yform):
        assert gorenstein_sequence(yform("1/24*y1^2*y2^2", 2)) == [1, 2, 3, 2, 1]

    def test_symmetric_on_random_forms(self, rng):
        for _ in range(20):
            seq = gorenstein_sequence(random_form(rng, Side.Y, 3, 4, height=2))
            assert seq == seq[::-1]

    def test_zero_form(self):
        with pytest.raises(PreconditionError):
            gorenstein_sequence(GradedForm.zero(Side.Y, 3, 3))


def test_pairing_matrix_is_diagonal_factorials():
    P = pairing_matrix(2, 2)
    assert P == ExactMatrix.diagonal([Fraction(2), Fraction(1), Fraction(2)])
