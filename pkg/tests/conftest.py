"""Shared fixtures."""

from fractions import Fraction
from typing import Callable, List

import pytest

from assoform.algebra.quotalg import FormTuple
from assoform.core.polyring import GradedForm, Side
from assoform.core.textio import parse_form
from assoform.verification.sampler import make_rng
from assoform.varieties.ternary import CanonicalCubicId, canonical_cubic


@pytest.fixture
def xform() -> Callable[..., GradedForm]:
    """Parse an x-side form: xform("x1^2 - x2^2", n=2)."""
    def _parse(text: str, n: int) -> GradedForm:
        return parse_form(text, Side.X, n)
    return _parse


@pytest.fixture
def yform() -> Callable[..., GradedForm]:
    def _parse(text: str, n: int) -> GradedForm:
        return parse_form(text, Side.Y, n)
    return _parse


@pytest.fixture
def xtuple() -> Callable[..., FormTuple]:
    """Parse a tuple: xtuple(["x1^2", "x2^2"])."""
    def _parse(texts: List[str]) -> FormTuple:
        n = len(texts)
        return FormTuple(tuple(parse_form(t, Side.X, n) for t in texts))
    return _parse


@pytest.fixture
def rng():
    return make_rng(20240611)


@pytest.fixture
def cubic() -> Callable[..., GradedForm]:
    """cubic(4) is c_4; cubic(1, t) is the Hesse pencil member c_{1,t}."""
    def _make(family: int, t=None) -> GradedForm:
        return canonical_cubic(CanonicalCubicId(family, Fraction(t) if t is not None else None))
    return _make
