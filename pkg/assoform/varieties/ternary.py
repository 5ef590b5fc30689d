"""Ternary cubics: the Aronhold invariant S and the image of A for n = 3, d = 2.

A ternary cubic is stored in the classical normalization

    c = a y1^3 + b y2^3 + c y3^3 + 3d y1^2 y2 + 3e y1^2 y3 + 3f y1 y2^2
        + 3g y2^2 y3 + 3h y1 y3^2 + 3i y2 y3^2 + 6j y1 y2 y3

and a cubic is an associated form exactly when S(c) != 0.
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..algebra.apolar import annihilator_piece, span_equal
from ..algebra.assocform import associated_form
from ..algebra.resultant import unimodular_matrix
from ..core.polyring import GradedForm, Side
from ..core.textio import parse_form, render_form, render_scalar
from ..errors import DegreeError, PreconditionError, VerificationFailure
from .catvar import in_U_Res, proportional

logger = logging.getLogger(__name__)

# monomial -> (field, weight)
_LAYOUT: Tuple[Tuple[Tuple[int, int, int], str, int], ...] = (
    ((3, 0, 0), "a", 1),
    ((0, 3, 0), "b", 1),
    ((0, 0, 3), "c", 1),
    ((2, 1, 0), "d", 3),
    ((2, 0, 1), "e", 3),
    ((1, 2, 0), "f", 3),
    ((0, 2, 1), "g", 3),
    ((1, 0, 2), "h", 3),
    ((0, 1, 2), "i", 3),
    ((1, 1, 1), "j", 6),
)


@dataclass(frozen=True)
class TernaryCubic:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    e: Fraction = Fraction(0)
    f: Fraction = Fraction(0)
    g: Fraction = Fraction(0)
    h: Fraction = Fraction(0)
    i: Fraction = Fraction(0)
    j: Fraction = Fraction(0)

    @classmethod
    def from_form(cls, form: GradedForm) -> "TernaryCubic":
        if form.n != 3 or form.degree != 3:
            raise DegreeError("a ternary cubic has three variables and degree 3")
        return cls(**{name: Fraction(form.coefficient(mono)) / weight for mono, name, weight in _LAYOUT})

    def to_form(self, side: Side = Side.Y) -> GradedForm:
        return GradedForm(side, 3, 3, {mono: getattr(self, name) * weight for mono, name, weight in _LAYOUT})


def aronhold_S(cubic: TernaryCubic) -> Fraction:
    """The degree-4 Aronhold invariant, term for term in the classical formula."""
    a, b, c, d, e = cubic.a, cubic.b, cubic.c, cubic.d, cubic.e
    f, g, h, i, j = cubic.f, cubic.g, cubic.h, cubic.i, cubic.j
    return (
        a * b * c * j - b * c * d * e - c * a * f * g - a * b * h * i
        - j * (a * g * i + b * h * e + c * d * f)
        + a * f * i ** 2 + a * h * g ** 2 + b * d * h ** 2 + b * i * e ** 2 + c * g * d ** 2 + c * e * f ** 2
        - j ** 4
        + 2 * j ** 2 * (f * h + i * d + e * g)
        - 3 * j * (d * g * h + e * f * i)
        - f ** 2 * h ** 2 - i ** 2 * d ** 2 - e ** 2 * g ** 2
        + i * d * e * g + e * g * f * h + f * h * i * d
    )


def aronhold_of_form(form: GradedForm) -> Fraction:
    return aronhold_S(TernaryCubic.from_form(form))


@dataclass(frozen=True)
class CanonicalCubicId:
    """One of the listed normal forms; family 1 is the Hesse pencil c_{1,t}."""
    family: int
    t: Optional[Fraction] = None

    def __post_init__(self):
        if not 1 <= self.family <= 9:
            raise PreconditionError(f"canonical cubic families are numbered 1..9, got {self.family}")
        if self.family == 1:
            t = Fraction(self.t if self.t is not None else 0)
            if t ** 3 == -27:
                raise PreconditionError("the Hesse pencil excludes t^3 = -27")
            object.__setattr__(self, "t", t)
        elif self.t is not None:
            raise PreconditionError(f"family {self.family} takes no parameter")

    @property
    def label(self) -> str:
        return f"c1[t={render_scalar(self.t)}]" if self.family == 1 else f"c{self.family}"

    @classmethod
    def parse(cls, text: str) -> "CanonicalCubicId":
        """Read ``c4`` or ``c1:1/2`` style labels."""
        body = text.strip().lower().lstrip("c")
        if ":" in body:
            family, t = body.split(":", 1)
            return cls(int(family), Fraction(t))
        return cls(int(body))


_CANONICAL_TEXT = {
    2: "y1^3 + y2^2*y3",
    3: "y1^3 + y1^2*y3 + y2^2*y3",
    4: "y1^2*y3 + y2*y3^2",
    5: "y1^3 + y1*y2*y3",
    6: "y1*y2*y3",
    7: "y1^2*y2 + y1*y2^2",
    8: "y1^2*y2",
    9: "y1^3",
}


def canonical_cubic(cid: CanonicalCubicId, side: Side = Side.Y) -> GradedForm:
    if cid.family == 1:
        form = parse_form("y1^3 + y2^3 + y3^3", Side.Y, 3, 3)
        form = form + GradedForm.monomial(Side.Y, (1, 1, 1), cid.t)
    else:
        form = parse_form(_CANONICAL_TEXT[cid.family], Side.Y, 3, 3)
    return form if side == Side.Y else form.with_side(side)


def in_image_ternary(form: GradedForm, cross_check: bool = True) -> bool:
    """S(c) != 0, checked against in_U_Res unless ``cross_check`` is off."""
    if form.side != Side.Y:
        raise DegreeError("associated forms live in the y-side ring")
    verdict = aronhold_of_form(form) != 0
    if cross_check and verdict != in_U_Res(form):
        raise AssertionError(f"S and U_Res disagree on {render_form(form)}")
    return verdict


# ----------------------------------------------------------------------
# Verification of the characterization
# ----------------------------------------------------------------------

ZERO_S = (CanonicalCubicId(1, Fraction(0)), CanonicalCubicId(1, Fraction(6)), CanonicalCubicId(2),
          CanonicalCubicId(4), CanonicalCubicId(7), CanonicalCubicId(8), CanonicalCubicId(9))
NONZERO_S = (CanonicalCubicId(1, Fraction(1)), CanonicalCubicId(1, Fraction(2)), CanonicalCubicId(3),
             CanonicalCubicId(5), CanonicalCubicId(6))

ANNIHILATOR_TABLES: Dict[CanonicalCubicId, Tuple[str, ...]] = {
    CanonicalCubicId(1, Fraction(0)): ("x1*x2", "x1*x3", "x2*x3"),
    CanonicalCubicId(2): ("x1*x2", "x1*x3", "x3^2"),
    CanonicalCubicId(4): ("x1^2 - x2*x3", "x1*x2", "x2^2"),
    CanonicalCubicId(7): ("x1^2 + x2^2 - x1*x2", "x1*x3", "x2*x3", "x3^2"),
    CanonicalCubicId(8): ("x1*x3", "x2^2", "x2*x3", "x3^2"),
    CanonicalCubicId(9): ("x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"),
    CanonicalCubicId(3): ("x1^2 - x2^2 - 3*x1*x3", "x1*x2", "x3^2"),
    CanonicalCubicId(5): ("x1^2 - 6*x2*x3", "x2^2", "x3^2"),
}


@dataclass
class TernaryCase:
    """One checked identity with its exact data."""
    check: str
    subject: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _fail_fast(case: TernaryCase) -> TernaryCase:
    if not case.passed:
        raise VerificationFailure(f"{case.check} failed for {case.subject}", case.to_dict())
    return case


def check_partition() -> List[TernaryCase]:
    """S vanishes exactly on the listed degenerate normal forms."""
    cases = []
    for expected_zero, ids in ((True, ZERO_S), (False, NONZERO_S)):
        for cid in ids:
            form = canonical_cubic(cid)
            s = aronhold_of_form(form)
            agree = (s == 0) == expected_zero and in_image_ternary(form) == (not expected_zero)
            cases.append(_fail_fast(TernaryCase(
                "partition", cid.label, agree, {"S": render_scalar(s), "form": render_form(form)},
            )))
    return cases


def check_annihilator_tables() -> List[TernaryCase]:
    cases = []
    for cid, table in ANNIHILATOR_TABLES.items():
        expected = [parse_form(t, Side.X, 3, 2) for t in table]
        computed = annihilator_piece(canonical_cubic(cid), 2)
        ok = span_equal(computed, expected, n=3, degree=2)
        cases.append(_fail_fast(TernaryCase(
            "annihilator_table", cid.label, ok,
            {"expected": list(table), "computed": [render_form(f) for f in computed]},
        )))
    return cases


def hesse_partner(t: Fraction) -> Fraction:
    """The s with A(c_{1,s}) proportional to c_{1,t}."""
    return Fraction(-18) / t


def check_hesse_pencil(params: Tuple[int, ...] = (1, 2, 3)) -> List[TernaryCase]:
    """A(c_{1,-18/t}) ∝ c_{1,t}, and A(c_{1,0}) ∝ c_6."""
    pairs = [(CanonicalCubicId(1, hesse_partner(Fraction(t))), CanonicalCubicId(1, Fraction(t))) for t in params]
    pairs.append((CanonicalCubicId(1, Fraction(0)), CanonicalCubicId(6)))
    cases = []
    for source, target in pairs:
        F = associated_form(canonical_cubic(source, Side.X)).F
        mu = proportional(canonical_cubic(target), F)
        cases.append(_fail_fast(TernaryCase(
            "hesse_pencil", f"A({source.label}) ~ {target.label}", mu is not None,
            {"associated_form": render_form(F), "scalar": render_scalar(mu) if mu is not None else None},
        )))
    return cases


def check_random_agreement(cubics: List[GradedForm]) -> List[TernaryCase]:
    """S != 0 and in_U_Res agree on every given cubic."""
    cases = []
    for k, form in enumerate(cubics):
        s = aronhold_of_form(form)
        member = in_U_Res(form)
        cases.append(_fail_fast(TernaryCase(
            "aronhold_vs_U_Res", f"random[{k}]", (s != 0) == member,
            {"form": render_form(form), "S": render_scalar(s), "U_Res": member},
        )))
    return cases


def check_sl3_invariance(cubics: List[GradedForm], rng: np.random.Generator) -> List[TernaryCase]:
    """S(c o C) == S(c) for integer matrices C of determinant 1."""
    cases = []
    for k, form in enumerate(cubics):
        C = unimodular_matrix(3, rng)
        before, after = aronhold_of_form(form), aronhold_of_form(form.substitute(C))
        cases.append(_fail_fast(TernaryCase(
            "sl3_invariance", f"random[{k}]", before == after,
            {"form": render_form(form), "matrix": C, "S": render_scalar(before), "S_after": render_scalar(after)},
        )))
    return cases


def degenerate_orbit_samples(rng: np.random.Generator, count: int) -> List[GradedForm]:
    """SL3-translates of the zero-S normal forms, all outside the image of A."""
    out = []
    for k in range(count):
        base = canonical_cubic(ZERO_S[k % len(ZERO_S)])
        out.append(base.substitute(unimodular_matrix(3, rng)))
    return out
