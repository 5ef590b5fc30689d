"""Exact scalars, monomials and homogeneous forms.

Monomials are exponent tuples. Within a degree they are ordered graded-lex
with x1 > x2 > ... > xn; every matrix built in the package indexes its rows
and columns with :func:`monomial_basis`, so this order is load-bearing.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from ..errors import DegreeError

Monomial = Tuple[int, ...]
# Coefficients are Fractions, or any exact ring element closed under + - *
# (the jet scalars of exactla use this to push derivatives through forms).
Coefficient = Any
ScalarLike = Union[int, Fraction]


class Side(str, Enum):
    """Which variable set a form lives in."""
    X = "x"
    Y = "y"


def _coerce(c: Coefficient) -> Coefficient:
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


@lru_cache(maxsize=None)
def monomial_basis(n: int, j: int) -> Tuple[Monomial, ...]:
    """All monomials of degree ``j`` in ``n`` variables, in decreasing grlex order.

    Args:
        n: Number of variables (n >= 1)
        j: Degree (j >= 0)

    Returns:
        Tuple of exponent tuples of length binom(j+n-1, n-1)
    """
    if n < 1 or j < 0:
        raise ValueError(f"monomial_basis needs n >= 1 and j >= 0, got n={n}, j={j}")
    if n == 1:
        return ((j,),)
    out: List[Monomial] = []
    for first in range(j, -1, -1):
        for rest in monomial_basis(n - 1, j - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, j: int) -> Mapping[Monomial, int]:
    """Position of each monomial of degree ``j`` in :func:`monomial_basis`."""
    return MappingProxyType({m: i for i, m in enumerate(monomial_basis(n, j))})


def basis_size(n: int, j: int) -> int:
    """dim of the degree-j piece of a polynomial ring in n variables."""
    if j < 0:
        return 0
    return comb(j + n - 1, n - 1)


def multinomial(N: int, alpha: Sequence[int]) -> int:
    """Exact multinomial coefficient N!/(alpha_1!...alpha_n!)."""
    if sum(alpha) != N or any(a < 0 for a in alpha):
        raise ValueError(f"exponents {tuple(alpha)} do not sum to {N}")
    return factorial(N) // prod(factorial(a) for a in alpha)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class GradedForm:
    """A homogeneous polynomial of fixed degree in x1..xn or y1..yn.

    Zero coefficients are never stored; the zero form has an empty map.
    """
    side: Side
    n: int
    degree: int
    coefficients: Mapping[Monomial, Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DegreeError(f"number of variables must be positive, got {self.n}")
        if self.degree < 0:
            raise DegreeError(f"degree must be non-negative, got {self.degree}")
        clean: Dict[Monomial, Coefficient] = {}
        for mono, coeff in self.coefficients.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.n or sum(mono) != self.degree or min(mono) < 0:
                raise DegreeError(
                    f"monomial {mono} does not have degree {self.degree} in {self.n} variables"
                )
            coeff = _coerce(coeff)
            if coeff:
                clean[mono] = coeff
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "coefficients", MappingProxyType(clean))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, side: Side, n: int, degree: int) -> "GradedForm":
        return cls(side, n, degree, {})

    @classmethod
    def monomial(cls, side: Side, exponents: Sequence[int], coeff: Coefficient = 1) -> "GradedForm":
        """The single term ``coeff * v^exponents``."""
        exps = tuple(exponents)
        return cls(side, len(exps), sum(exps), {exps: coeff})

    @classmethod
    def variable(cls, side: Side, n: int, k: int) -> "GradedForm":
        """The variable v_{k+1} (0-based ``k``)."""
        exps = [0] * n
        exps[k] = 1
        return cls.monomial(side, exps)

    @classmethod
    def from_vector(cls, side: Side, n: int, degree: int, vector: Sequence[Coefficient]) -> "GradedForm":
        """Inverse of :meth:`vector`."""
        basis = monomial_basis(n, degree)
        if len(vector) != len(basis):
            raise DegreeError(f"expected {len(basis)} coordinates, got {len(vector)}")
        return cls(side, n, degree, dict(zip(basis, vector)))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, mono: Monomial) -> Coefficient:
        return self.coefficients.get(tuple(mono), Fraction(0))

    def vector(self) -> List[Coefficient]:
        """Dense coordinates in :func:`monomial_basis` order."""
        zero = Fraction(0)
        return [self.coefficients.get(m, zero) for m in monomial_basis(self.n, self.degree)]

    def terms(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        """Nonzero terms in decreasing grlex order."""
        for mono in sorted(self.coefficients, reverse=True):
            yield mono, self.coefficients[mono]

    def evaluate(self, point: Sequence[ScalarLike]) -> Coefficient:
        """Value of the form at a point of Q^n."""
        total: Coefficient = Fraction(0)
        for mono, coeff in self.coefficients.items():
            total = total + coeff * prod(Fraction(p) ** e for p, e in zip(point, mono))
        return total

    def with_side(self, side: Side) -> "GradedForm":
        """The same coefficients read in the other variable set."""
        return GradedForm(side, self.n, self.degree, dict(self.coefficients))

    def map_coefficients(self, fn) -> "GradedForm":
        return GradedForm(self.side, self.n, self.degree,
                          {m: fn(c) for m, c in self.coefficients.items()})

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _check_compatible(self, other: "GradedForm", same_degree: bool) -> None:
        if self.side != other.side or self.n != other.n:
            raise DegreeError(
                f"cannot combine forms in {self.n} {self.side.value}-variables "
                f"and {other.n} {other.side.value}-variables"
            )
        if same_degree and self.degree != other.degree:
            raise DegreeError(f"cannot add forms of degrees {self.degree} and {other.degree}")

    def add(self, other: "GradedForm") -> "GradedForm":
        self._check_compatible(other, same_degree=True)
        coeffs = dict(self.coefficients)
        for mono, c in other.coefficients.items():
            coeffs[mono] = coeffs[mono] + c if mono in coeffs else c
        return GradedForm(self.side, self.n, self.degree, coeffs)

    def scale(self, c: Coefficient) -> "GradedForm":
        c = _coerce(c)
        return GradedForm(self.side, self.n, self.degree,
                          {m: v * c for m, v in self.coefficients.items()})

    def mul(self, other: "GradedForm") -> "GradedForm":
        self._check_compatible(other, same_degree=False)
        coeffs: Dict[Monomial, Coefficient] = {}
        for ma, ca in self.coefficients.items():
            for mb, cb in other.coefficients.items():
                mono = _mono_mul(ma, mb)
                term = ca * cb
                coeffs[mono] = coeffs[mono] + term if mono in coeffs else term
        return GradedForm(self.side, self.n, self.degree + other.degree, coeffs)

    def __add__(self, other: "GradedForm") -> "GradedForm":
        return self.add(other)

    def __neg__(self) -> "GradedForm":
        return self.scale(-1)

    def __sub__(self, other: "GradedForm") -> "GradedForm":
        return self.add(-other)

    def __mul__(self, other: Union["GradedForm", Coefficient]) -> "GradedForm":
        if isinstance(other, GradedForm):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other: Coefficient) -> "GradedForm":
        return self.scale(other)

    def __pow__(self, k: int) -> "GradedForm":
        result = GradedForm.monomial(self.side, (0,) * self.n)
        for _ in range(k):
            result = result.mul(self)
        return result

    def derivative(self, k: int) -> "GradedForm":
        """Partial derivative with respect to the (0-based) k-th variable."""
        if self.degree == 0:
            return GradedForm.zero(self.side, self.n, 0)
        coeffs: Dict[Monomial, Coefficient] = {}
        for mono, c in self.coefficients.items():
            e = mono[k]
            if e:
                lowered = mono[:k] + (e - 1,) + mono[k + 1:]
                coeffs[lowered] = c * e
        return GradedForm(self.side, self.n, self.degree - 1, coeffs)

    def substitute(self, C: Sequence[Sequence[ScalarLike]]) -> "GradedForm":
        """The form v -> f(C v); see :func:`substitute`."""
        return substitute(self, C)

    # ------------------------------------------------------------------
    # Value semantics
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedForm):
            return NotImplemented
        return (self.side == other.side and self.n == other.n
                and self.degree == other.degree
                and dict(self.coefficients) == dict(other.coefficients))

    def __hash__(self) -> int:
        return hash((self.side, self.n, self.degree, frozenset(self.coefficients.items())))

    def __repr__(self) -> str:
        from .textio import render_form
        return f"GradedForm({render_form(self)!r}, n={self.n}, degree={self.degree})"


def add(f: GradedForm, g: GradedForm) -> GradedForm:
    return f.add(g)


def scale(f: GradedForm, c: Coefficient) -> GradedForm:
    return f.scale(c)


def mul(f: GradedForm, g: GradedForm) -> GradedForm:
    return f.mul(g)


def substitute(f: GradedForm, C: Sequence[Sequence[ScalarLike]]) -> GradedForm:
    """Replace v by C·v, i.e. return the form v -> f(C v).

    Under this right action substitute(substitute(f, C), D) == substitute(f, C @ D).

    Args:
        f: Form to transform
        C: Square n x n matrix (rows of scalars)

    Returns:
        Transformed form of the same degree
    """
    n = f.n
    if len(C) != n or any(len(row) != n for row in C):
        raise DegreeError(f"substitution matrix must be {n}x{n}")
    linear = [
        GradedForm(f.side, n, 1, {tuple(int(i == l) for i in range(n)): C[k][l] for l in range(n)})
        for k in range(n)
    ]
    powers: Dict[Tuple[int, int], GradedForm] = {}

    def power(k: int, e: int) -> GradedForm:
        if (k, e) not in powers:
            powers[(k, e)] = linear[k] ** e
        return powers[(k, e)]

    result = GradedForm.zero(f.side, n, f.degree)
    for mono, c in f.coefficients.items():
        term = GradedForm.monomial(f.side, (0,) * n, c)
        for k, e in enumerate(mono):
            if e:
                term = term.mul(power(k, e))
        result = result.add(term)
    return result
