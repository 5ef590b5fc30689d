"""Tests for scalars, monomials and forms."""

from fractions import Fraction
from math import comb

import pytest

from assoform.core.polyring import (
    GradedForm, Side, add, monomial_basis, mul, multinomial, scale, substitute,
)
from assoform.errors import DegreeError
from assoform.verification.sampler import random_form, random_invertible_matrix


class TestMonomialBasis:
    def test_binary_quadrics_in_grlex_order(self):
        assert monomial_basis(2, 2) == ((2, 0), (1, 1), (0, 2))

    def test_ternary_lengths(self):
        assert len(monomial_basis(3, 2)) == 6
        assert len(monomial_basis(3, 1)) == 3

    @pytest.mark.parametrize("d", [2, 3, 4, 7])
    def test_binary_lengths(self, d):
        assert len(monomial_basis(2, d)) == d + 1
        assert len(monomial_basis(2, d - 2)) == d - 1

    def test_lengths_match_binomials(self):
        for n in range(1, 5):
            for j in range(13):
                assert len(monomial_basis(n, j)) == comb(j + n - 1, n - 1)

    def test_ternary_order(self):
        assert monomial_basis(3, 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            monomial_basis(0, 2)


class TestRingOperations:
    def test_difference_of_squares(self, xform):
        assert mul(xform("x1 + x2", 2), xform("x1 - x2", 2)) == xform("x1^2 - x2^2", 2)

    def test_scale_by_zero(self, yform):
        zero = scale(yform("y1*y2*y3", 3), 0)
        assert zero.is_zero()
        assert zero.degree == 3

    def test_monomial_product(self, xform):
        assert mul(xform("x1^2", 2), xform("x2^2", 2)) == xform("x1^2*x2^2", 2)

    def test_add_rejects_mixed_degrees(self, xform):
        with pytest.raises(DegreeError):
            add(xform("x1^2", 2), xform("x1^3", 2))

    def test_add_rejects_mixed_sides(self, xform, yform):
        with pytest.raises(DegreeError):
            add(xform("x1^2", 2), yform("y1^2", 2))

    def test_no_zero_coefficients_stored(self, xform):
        f = xform("x1^2 + x2^2", 2) - xform("x2^2", 2)
        assert dict(f.coefficients) == {(2, 0): Fraction(1)}

    def test_constructor_rejects_wrong_degree(self):
        with pytest.raises(DegreeError):
            GradedForm(Side.X, 2, 2, {(1, 0): 1})

    def test_ring_axioms_on_random_forms(self, rng):
        for _ in range(20):
            f, g, h = (random_form(rng, Side.X, 3, 2, height=5) for _ in range(3))
            k = random_form(rng, Side.X, 3, 1, height=5)
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert f * k == k * f
            assert (f * k) * k == f * (k * k)
            assert (f + g) * k == f * k + g * k

    def test_derivative(self, xform):
        assert xform("x1^2*x2 + x2^3", 2).derivative(1) == xform("x1^2 + 3*x2^2", 2)

    def test_evaluate(self, xform):
        assert xform("x1^2 - 6*x2*x3", 3).evaluate([1, 1, 1]) == -5


class TestMultinomial:
    @pytest.mark.parametrize("N, alpha, expected", [
        (2, (1, 1), 2),
        (3, (1, 1, 1), 6),
        (3, (3, 0, 0), 1),
        (6, (2, 2, 2), 90),
    ])
    def test_values(self, N, alpha, expected):
        assert multinomial(N, alpha) == expected

    def test_rejects_wrong_total(self):
        with pytest.raises(ValueError):
            multinomial(3, (1, 1))


class TestSubstitute:
    def test_identity(self, yform):
        f = yform("y1^3 + 2*y1*y2*y3 - y3^3", 3)
        identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert substitute(f, identity) == f

    def test_swap(self, yform):
        swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        assert substitute(yform("y1^3", 3), swap) == yform("y2^3", 3)

    def test_diagonal(self, yform):
        assert substitute(yform("y1*y2", 2), [[2, 0], [0, 3]]) == yform("6*y1*y2", 2)

    def test_linear_change(self, xform):
        assert xform("x1*x2", 2).substitute([[1, 1], [1, -1]]) == xform("x1^2 - x2^2", 2)

    def test_compositionality(self, rng):
        for _ in range(10):
            f = random_form(rng, Side.Y, 3, 3, height=4)
            C = random_invertible_matrix(rng, 3)
            D = [[Fraction(int(v), 2) for v in rng.integers(-3, 4, size=3)] for _ in range(3)]
            CD = [[sum(C[i][k] * D[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
            assert substitute(substitute(f, C), D) == substitute(f, CD)

    def test_rejects_wrong_size(self, yform):
        with pytest.raises(DegreeError):
            substitute(yform("y1*y2", 2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
