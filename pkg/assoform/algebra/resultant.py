"""Resultants of n forms of equal degree d in n variables.

Every decision in the package depends only on whether Res(f) vanishes, and
that predicate is :func:`resultant_nonvanishing` (finite colength of M(f)).
Exact values are available on demand through sympy: the Sylvester resultant
for binary forms and Macaulay's quotient det(M)/det(M') in general. The Macaulay
normalization gives Res(x_1^d, ..., x_n^d) = 1; for n = 2 both constructions
build the same matrix.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
import sympy
from sympy.polys.multivariate_resultants import MacaulayResultant

from ..core.exactla import ExactMatrix, det, from_sympy, to_sympy
from ..core.polyring import GradedForm, Monomial, Side, monomial_basis
from ..errors import DegreeError, GenericityFailure
from .quotalg import FormTuple, is_finite_colength

logger = logging.getLogger(__name__)

MACAULAY_RETRIES = 20


class ResultantMethod(str, Enum):
    FINITE_COLENGTH = "FiniteColength"
    SYLVESTER = "Sylvester"
    MACAULAY_QUOTIENT = "MacaulayQuotient"


@dataclass(frozen=True)
class ResultantReport:
    """Outcome of a resultant computation; value is None for the predicate-only method."""
    nonvanishing: bool
    value: Optional[Fraction]
    method: ResultantMethod
    retries: int = 0

    def __post_init__(self):
        if self.value is not None and (self.value != 0) != self.nonvanishing:
            raise AssertionError("resultant value disagrees with the nonvanishing flag")


def default_rng(seed: int = 0) -> np.random.Generator:
    """The package's named generator: numpy PCG64."""
    return np.random.Generator(np.random.PCG64(seed))


def resultant_nonvanishing(ftuple: FormTuple) -> bool:
    """Res(f) != 0, decided as finite colength of M(f)."""
    return is_finite_colength(ftuple)


def _symbols(n: int):
    return sympy.symbols(f"x1:{n + 1}")


def to_expr(form: GradedForm, xs) -> sympy.Expr:
    """The form as a sympy expression in ``xs``."""
    return sympy.Add(*(to_sympy(c) * sympy.Mul(*(x ** e for x, e in zip(xs, mono))) for mono, c in form.terms()))


def _exponents(monomial, xs) -> Monomial:
    return tuple(int(e) for e in sympy.Poly(monomial, *xs).monoms()[0])


def _check_binary(f: GradedForm, g: GradedForm) -> None:
    if f.n != 2 or g.n != 2 or f.side != Side.X or g.side != Side.X:
        raise DegreeError("the Sylvester resultant takes binary x-side forms")
    if f.degree != g.degree:
        raise DegreeError("forms must share their degree")


def sylvester_matrix(f: GradedForm, g: GradedForm) -> ExactMatrix:
    """2d x 2d Sylvester matrix of two binary forms of degree d.

    With f = sum a_k x1^(d-k) x2^k, row k (0 <= k < d) holds a_0..a_d starting
    at column k; rows d..2d-1 do the same for g. Zero leading coefficients are
    kept, so the layout is that of the forms, not of their dehomogenizations.
    """
    _check_binary(f, g)
    d = f.degree
    size = 2 * d
    rows: List[List[Fraction]] = []
    for form in (f, g):
        coeffs = form.vector()  # grlex order is x1^d, x1^(d-1) x2, ..., x2^d
        for shift in range(d):
            row = [Fraction(0)] * size
            row[shift:shift + d + 1] = coeffs
            rows.append(row)
    return ExactMatrix.from_rows(rows, cols=size)


def _leading_shift(f: GradedForm, g: GradedForm) -> int:
    """Smallest k >= 0 with f(1, k) and g(1, k) both nonzero."""
    for k in range(2 * f.degree + 1):
        if f.evaluate((1, k)) != 0 and g.evaluate((1, k)) != 0:
            return k
    raise ValueError("a nonzero binary form of degree d has at most d zeros on x1 = 1")


def sylvester_resultant(f: GradedForm, g: GradedForm) -> Fraction:
    """Res(f, g) for binary forms of equal degree; zero iff they share a projective zero.

    Equals det(sylvester_matrix(f, g)). When a leading coefficient vanishes
    both forms are first moved by x2 -> x2 + k x1, which has determinant 1
    and so leaves the resultant unchanged, then dehomogenized and handed to
    sympy.
    """
    _check_binary(f, g)
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    k = _leading_shift(f, g)
    if k:
        f, g = f.substitute([[1, 0], [k, 1]]), g.substitute([[1, 0], [k, 1]])
    x = sympy.Symbol("x")
    p, q = (sympy.Add(*(to_sympy(c) * x ** mono[0] for mono, c in form.terms())) for form in (f, g))
    return from_sympy(sympy.resultant(p, q, x))


def macaulay_matrices(ftuple: FormTuple) -> Tuple[ExactMatrix, ExactMatrix]:
    """Macaulay's matrix M in degree t = n(d-1)+1 and its minor M'.

    sympy's ``MacaulayResultant`` builds M: the row of a monomial m is
    (m / x_i^d) f_i where i is the smallest index with x_i^d | m. Rows and
    columns are then both indexed by the grlex basis in degree t, so the
    coordinate powers give the identity. M' keeps the rows and columns of
    monomials divisible by at least two of the powers x_j^d.
    """
    n, d = ftuple.n, ftuple.d
    t = n * (d - 1) + 1
    basis = monomial_basis(n, t)
    xs = _symbols(n)
    mac = MacaulayResultant(polynomials=[to_expr(f, xs) for f in ftuple], variables=list(xs))
    matrix = mac.get_matrix()
    column = {_exponents(m, xs): j for j, m in enumerate(mac.monomial_set)}
    owner_row = {}
    position = 0
    for i, multipliers in enumerate(mac.get_row_coefficients()):
        for multiplier in multipliers:
            owner_row[_exponents(multiplier * xs[i] ** d, xs)] = position
            position += 1
    rows = [[from_sympy(matrix[owner_row[m], column[m2]]) for m2 in basis] for m in basis]
    non_reduced = [pos for pos, mono in enumerate(basis) if sum(1 for e in mono if e >= d) >= 2]
    M = ExactMatrix.from_rows(rows, cols=len(basis))
    return M, M.submatrix(non_reduced, non_reduced)


def unimodular_matrix(n: int, rng: np.random.Generator) -> List[List[int]]:
    """L·U with unit diagonals and small integer entries, so det = 1."""
    lower = [[1 if i == j else (int(rng.integers(-2, 3)) if i > j else 0) for j in range(n)] for i in range(n)]
    upper = [[1 if i == j else (int(rng.integers(-2, 3)) if i < j else 0) for j in range(n)] for i in range(n)]
    return [[sum(lower[i][k] * upper[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def macaulay_resultant(ftuple: FormTuple, rng: Optional[np.random.Generator] = None,
                       retries: int = MACAULAY_RETRIES) -> ResultantReport:
    """Exact resultant as det(M)/det(M').

    When det(M') vanishes the variables are changed by a random integer matrix
    of determinant 1, which leaves the resultant unchanged, and the quotient is
    tried again.

    Raises:
        GenericityFailure: det(M') stayed zero for every retry
    """
    if ftuple.n < 2:
        raise DegreeError("the Macaulay resultant needs at least two variables")
    if any(f.is_zero() for f in ftuple):
        return ResultantReport(False, Fraction(0), ResultantMethod.MACAULAY_QUOTIENT)
    rng = rng if rng is not None else default_rng()
    current = ftuple
    for attempt in range(retries + 1):
        M, M_prime = macaulay_matrices(current)
        denominator = det(M_prime)
        if denominator != 0:
            value = det(M) / denominator
            return ResultantReport(value != 0, value, ResultantMethod.MACAULAY_QUOTIENT, attempt)
        logger.debug("Macaulay minor vanished on attempt %d; changing coordinates", attempt)
        current = ftuple.substitute(unimodular_matrix(ftuple.n, rng))
    raise GenericityFailure(f"Macaulay minor vanished after {retries} coordinate changes")


def resultant_report(ftuple: FormTuple, exact: bool = False,
                     rng: Optional[np.random.Generator] = None) -> ResultantReport:
    """Resultant predicate, with an exact value when ``exact`` is set.

    Falls back to the finite-colength predicate when the Macaulay quotient
    cannot be evaluated.
    """
    if exact and ftuple.n == 2:
        value = sylvester_resultant(ftuple[0], ftuple[1])
        return ResultantReport(value != 0, value, ResultantMethod.SYLVESTER)
    if exact:
        try:
            return macaulay_resultant(ftuple, rng)
        except GenericityFailure:
            logger.warning("falling back to the finite-colength test for %r", ftuple)
    return ResultantReport(resultant_nonvanishing(ftuple), None, ResultantMethod.FINITE_COLENGTH)
