"""Tests for ternary cubics and the Aronhold invariant."""

from fractions import Fraction

import pytest
import sympy

from assoform.algebra.assocform import associated_form, associated_form_tuple
from assoform.core.polyring import Side
from assoform.errors import DegreeError, PreconditionError, VerificationFailure
from assoform.varieties.catvar import proportional
from assoform.varieties.ternary import (
    ANNIHILATOR_TABLES, CanonicalCubicId, TernaryCase, TernaryCubic, _fail_fast, aronhold_of_form,
    aronhold_S, canonical_cubic, check_annihilator_tables, check_hesse_pencil, check_partition,
    check_random_agreement, check_sl3_invariance, degenerate_orbit_samples, hesse_partner,
    in_image_ternary,
)
from assoform.verification.sampler import random_form, sample_good_tuple


class TestAronhold:
    @pytest.mark.parametrize("family, expected", [
        (6, Fraction(-1, 1296)),
        (3, Fraction(-1, 81)),
        (5, Fraction(-1, 1296)),
        (4, Fraction(0)),
        (9, Fraction(0)),
    ])
    def test_normal_forms(self, cubic, family, expected):
        assert aronhold_of_form(cubic(family)) == expected

    @pytest.mark.parametrize("t", [0, 1, 2, 6, Fraction(-1, 2)])
    def test_hesse_pencil(self, cubic, t):
        s = Fraction(t) / 6
        assert aronhold_of_form(cubic(1, t)) == s - s ** 4

    def test_homogeneous_of_degree_four(self, rng):
        for _ in range(10):
            form = random_form(rng, Side.Y, 3, 3, height=5)
            assert aronhold_of_form(form.scale(3)) == 81 * aronhold_of_form(form)

    def test_sl3_invariance(self, rng):
        cubics = [random_form(rng, Side.Y, 3, 3, height=4) for _ in range(20)]
        cases = check_sl3_invariance(cubics, rng)
        assert len(cases) == 20 and all(c.passed for c in cases)

    def test_classical_normalization(self):
        cubic = TernaryCubic(j=Fraction(1, 6))
        assert cubic.to_form().coefficient((1, 1, 1)) == 1
        assert aronhold_S(cubic) == Fraction(-1, 1296)

    def test_from_form(self, yform):
        cubic = TernaryCubic.from_form(yform("y1^3 + 3*y1^2*y2 + 6*y1*y2*y3", 3))
        assert (cubic.a, cubic.d, cubic.j) == (1, 1, 1)

    def test_rejects_other_degrees(self, yform):
        with pytest.raises(DegreeError):
            TernaryCubic.from_form(yform("y1^2", 3))


class TestCanonicalCubics:
    def test_default_parameter(self):
        assert CanonicalCubicId(1) == CanonicalCubicId(1, Fraction(0))

    def test_singular_pencil_member(self):
        with pytest.raises(PreconditionError):
            CanonicalCubicId(1, Fraction(-3))

    def test_unknown_family(self):
        with pytest.raises(PreconditionError):
            CanonicalCubicId(10)

    def test_parameter_only_for_the_pencil(self):
        with pytest.raises(PreconditionError):
            CanonicalCubicId(4, Fraction(1))

    def test_parse(self):
        assert CanonicalCubicId.parse("c1:1/2") == CanonicalCubicId(1, Fraction(1, 2))
        assert CanonicalCubicId.parse("c4").family == 4

    def test_labels(self):
        assert CanonicalCubicId(6).label == "c6"
        assert CanonicalCubicId(1, Fraction(2)).label == "c1[t=2]"

    def test_x_side(self, xform):
        assert canonical_cubic(CanonicalCubicId(4), Side.X) == xform("x1^2*x3 + x2*x3^2", 3)


class TestImage:
    @pytest.mark.parametrize("family", [3, 5, 6])
    def test_in_image(self, cubic, family):
        assert in_image_ternary(cubic(family))

    @pytest.mark.parametrize("family", [2, 4, 7, 8, 9])
    def test_not_in_image(self, cubic, family):
        assert not in_image_ternary(cubic(family))

    def test_rejects_x_side(self, xform):
        with pytest.raises(DegreeError):
            in_image_ternary(xform("x1^3", 3))

    def test_associated_forms_have_nonzero_S(self, rng):
        for _ in range(5):
            F = associated_form_tuple(sample_good_tuple(rng, 3, 2)).F
            assert aronhold_of_form(F) != 0

    def test_random_agreement(self, rng):
        cubics = [random_form(rng, Side.Y, 3, 3, height=3) for _ in range(15)]
        cubics += degenerate_orbit_samples(rng, 7)
        assert all(case.passed for case in check_random_agreement(cubics))

    def test_degenerate_orbits_have_zero_S(self, rng):
        assert all(aronhold_of_form(F) == 0 for F in degenerate_orbit_samples(rng, 14))


class TestChecks:
    def test_partition(self):
        cases = check_partition()
        assert len(cases) == 12
        assert all(c.passed for c in cases)

    def test_annihilator_tables(self):
        cases = check_annihilator_tables()
        assert len(cases) == len(ANNIHILATOR_TABLES) == 8

    def test_hesse_pencil(self):
        assert len(check_hesse_pencil()) == 4

    def test_hesse_partner(self, cubic):
        assert hesse_partner(Fraction(1)) == -18
        F = associated_form(canonical_cubic(CanonicalCubicId(1, Fraction(-18)), Side.X)).F
        assert proportional(cubic(1, 1), F) is not None

    def test_fermat_maps_to_the_triangle(self, cubic):
        F = associated_form(canonical_cubic(CanonicalCubicId(1), Side.X)).F
        assert proportional(cubic(6), F) == Fraction(1, 36)

    def test_failure_carries_the_case(self):
        case = TernaryCase("partition", "c4", False, {"S": "0"})
        with pytest.raises(VerificationFailure) as info:
            _fail_fast(case)
        assert info.value.counterexample["subject"] == "c4"


class TestSymbolicOracle:
    SYMBOLS = "a b c d e f g h i j"
    CLASSICAL = (
        "a*b*c*j - (b*c*d*e + c*a*f*g + a*b*h*i) - j*(a*g*i + b*h*e + c*d*f)"
        " + (a*f*i**2 + a*h*g**2 + b*d*h**2 + b*i*e**2 + c*g*d**2 + c*e*f**2)"
        " - j**4 + 2*j**2*(f*h + i*d + e*g) - 3*j*(d*g*h + e*f*i)"
        " - (f**2*h**2 + i**2*d**2 + e**2*g**2) + (i*d*e*g + e*g*f*h + f*h*i*d)"
    )

    def test_matches_symbolic_expansion(self, rng):
        names = sympy.symbols(self.SYMBOLS)
        expanded = sympy.expand(sympy.sympify(self.CLASSICAL))
        for _ in range(25):
            cubic = TernaryCubic.from_form(random_form(rng, Side.Y, 3, 3, height=6))
            values = {s: sympy.Rational(getattr(cubic, s.name).numerator, getattr(cubic, s.name).denominator)
                      for s in names}
            assert aronhold_S(cubic) == Fraction(str(expanded.subs(values)))

    def test_hesse_pencil_polynomial(self):
        t = sympy.Symbol("t")
        names = dict(zip(self.SYMBOLS.split(), sympy.symbols(self.SYMBOLS)))
        values = {names[k]: 0 for k in "defghi"}
        values.update({names["a"]: 1, names["b"]: 1, names["c"]: 1, names["j"]: t / 6})
        restricted = sympy.expand(sympy.sympify(self.CLASSICAL).subs(values))
        assert sympy.expand(restricted - (t / 6 - t ** 4 / 1296)) == 0
