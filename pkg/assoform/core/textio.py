"""Text and JSON formats for forms, tuples and matrices.

Text grammar (whitespace is ignored)::

    form     := term (("+" | "-") term)*      with an optional leading sign
    term     := [rational ["*"]] factor ("*"? factor)*  |  rational
    factor   := ("x" | "y") index ["^" exponent]
    rational := digits ["/" digits]

The printer always emits explicit ``*`` and lists terms in decreasing grlex
order, so ``parse_form(render_form(f)) == f``.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from ..errors import DegreeError, ParseError
from .exactla import ExactMatrix
from .polyring import GradedForm, Monomial, Side


class TermModel(BaseModel):
    """One term of a form; integers are decimal strings."""
    exp: List[int]
    num: str
    den: str = "1"


class FormModel(BaseModel):
    """JSON schema of a :class:`GradedForm`."""
    side: Side
    n: int = Field(ge=1)
    degree: int = Field(ge=0)
    terms: List[TermModel] = Field(default_factory=list)


_DIGITS = frozenset("0123456789")


class _Scanner:
    """Character scanner that tracks positions for error messages."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", start, self.text)
        return int(self.text[start:self.pos])

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos, self.text)


def _parse_term(sc: _Scanner, side: Side, n: int) -> Tuple[Monomial, Fraction]:
    coeff = Fraction(1)
    exps = [0] * n
    saw_anything = False

    if sc.peek() in _DIGITS:
        num = sc.digits()
        den = 1
        if sc.peek() == "/":
            sc.take()
            den = sc.digits()
            if den == 0:
                raise sc.error("zero denominator")
        coeff = Fraction(num, den)
        saw_anything = True
        if sc.peek() == "*":
            sc.take()
            if sc.peek() not in ("x", "y"):
                raise sc.error("expected a variable after '*'")

    while sc.peek() in ("x", "y"):
        start = sc.pos
        letter = sc.take()
        if letter != side.value:
            raise ParseError(f"variable '{letter}' does not belong to the {side.value}-side", start, sc.text)
        index = sc.digits()
        if not 1 <= index <= n:
            raise ParseError(f"variable index {index} out of range 1..{n}", start, sc.text)
        power = 1
        if sc.peek() == "^":
            sc.take()
            power = sc.digits()
        exps[index - 1] += power
        saw_anything = True
        if sc.peek() == "*":
            sc.take()
            if sc.peek() not in ("x", "y"):
                raise sc.error("expected a variable after '*'")

    if not saw_anything:
        raise sc.error("expected a coefficient or a variable")
    return tuple(exps), coeff


def parse_form(text: str, side: Union[Side, str], n: int,
               expected_degree: Optional[int] = None) -> GradedForm:
    """Parse a homogeneous form.

    Args:
        text: Form in the text grammar
        side: Variable set the form must use
        n: Number of variables
        expected_degree: If given, the form must be homogeneous of this degree

    Returns:
        Canonical form

    Raises:
        ParseError: Text does not match the grammar
        DegreeError: Terms of mixed degree, or not of ``expected_degree``
    """
    side = Side(side)
    sc = _Scanner(text)
    terms: Dict[Monomial, Fraction] = {}
    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.take() == "-" else 1
    if sc.peek() == "":
        raise sc.error("empty form")

    degree: Optional[int] = None
    while True:
        start = sc.pos
        mono, coeff = _parse_term(sc, side, n)
        term_degree = sum(mono)
        if coeff:
            if degree is None:
                degree = term_degree
            elif degree != term_degree:
                raise DegreeError(
                    f"term at position {start} has degree {term_degree}, expected {degree}"
                )
        terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
        nxt = sc.peek()
        if nxt == "":
            break
        if nxt not in ("+", "-"):
            raise sc.error(f"unexpected character {nxt!r}")
        sign = -1 if sc.take() == "-" else 1

    nonzero = {m: c for m, c in terms.items() if c}
    if not nonzero:
        return GradedForm.zero(side, n, expected_degree if expected_degree is not None else 0)
    degree = sum(next(iter(nonzero)))
    if expected_degree is not None and degree != expected_degree:
        raise DegreeError(f"expected a form of degree {expected_degree}, got degree {degree}")
    return GradedForm(side, n, degree, nonzero)


def render_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(side: Side, mono: Monomial) -> str:
    factors = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            factors.append(f"{side.value}{i}")
        elif e > 1:
            factors.append(f"{side.value}{i}^{e}")
    return "*".join(factors)


def render_form(f: GradedForm) -> str:
    """Canonical text of a form ("0" for the zero form)."""
    if f.is_zero():
        return "0"
    parts: List[str] = []
    for k, (mono, coeff) in enumerate(f.terms()):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono_text = render_monomial(f.side, mono)
        if not mono_text:
            body = render_scalar(magnitude)
        elif magnitude == 1:
            body = mono_text
        else:
            body = f"{render_scalar(magnitude)}*{mono_text}"
        if k == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


def parse_tuple(texts: Sequence[str], n: int, d: int) -> List[GradedForm]:
    """Parse n x-side forms of degree d."""
    if len(texts) != n:
        raise DegreeError(f"a tuple needs {n} forms, got {len(texts)}")
    return [parse_form(t, Side.X, n, expected_degree=d) for t in texts]


# ----------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------

def form_to_model(f: GradedForm) -> FormModel:
    return FormModel(
        side=f.side, n=f.n, degree=f.degree,
        terms=[TermModel(exp=list(m), num=str(c.numerator), den=str(c.denominator))
               for m, c in f.terms()],
    )


def form_from_model(model: FormModel) -> GradedForm:
    return GradedForm(model.side, model.n, model.degree,
                      {tuple(t.exp): Fraction(int(t.num), int(t.den)) for t in model.terms})


def form_to_json(f: GradedForm) -> str:
    return form_to_model(f).model_dump_json()


def form_from_json(text: str) -> GradedForm:
    return form_from_model(FormModel.model_validate_json(text))


def matrix_to_json(M: ExactMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "entries": [[render_scalar(x) for x in r] for r in M.entries]}


def matrix_from_json(data: Union[str, dict]) -> ExactMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    return ExactMatrix.from_rows([[Fraction(x) for x in r] for r in data["entries"]], cols=data["cols"])


# ----------------------------------------------------------------------
# Fixture files
# ----------------------------------------------------------------------

def iter_fixture_lines(lines: Iterable[str]) -> Iterable[str]:
    """Non-empty lines with ``#`` comments stripped."""
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if body:
            yield body


def read_fixture(path: Path, side: Union[Side, str], n: int,
                 expected_degree: Optional[int] = None) -> List[GradedForm]:
    """Read a fixture file holding one form per line."""
    with open(path, "r", encoding="utf-8") as fh:
        return [parse_form(line, side, n, expected_degree) for line in iter_fixture_lines(fh)]
