"""Polar pairing, catalecticant matrices and graded pieces of annihilators."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.exactla import ExactMatrix, kernel_basis, rank, same_span
from ..core.polyring import GradedForm, Monomial, Side, monomial_basis, monomial_index
from ..errors import DegreeError, PreconditionError


@lru_cache(maxsize=None)
def _falling(alpha: Monomial, gamma: Monomial) -> int:
    """alpha!/(alpha-gamma)!, the scalar of d^gamma applied to y^alpha."""
    return prod(factorial(a) // factorial(a - g) for a, g in zip(alpha, gamma))


def polar_pair(h: GradedForm, F: GradedForm) -> GradedForm:
    """h ⋄ F = h(d/dy1, ..., d/dyn) F.

    Args:
        h: x-side form of degree j
        F: y-side form of degree m >= j

    Returns:
        y-side form of degree m - j
    """
    if h.side != Side.X or F.side != Side.Y:
        raise DegreeError("polar pairing takes an x-side form and a y-side form")
    if h.n != F.n:
        raise DegreeError(f"variable counts differ: {h.n} and {F.n}")
    if h.degree > F.degree:
        raise DegreeError(f"cannot apply an operator of degree {h.degree} to a form of degree {F.degree}")
    out: Dict[Monomial, object] = {}
    for gamma, hc in h.coefficients.items():
        for alpha, fc in F.coefficients.items():
            if all(a >= g for a, g in zip(alpha, gamma)):
                beta = tuple(a - g for a, g in zip(alpha, gamma))
                term = hc * fc * _falling(alpha, gamma)
                out[beta] = out[beta] + term if beta in out else term
    return GradedForm(Side.Y, F.n, F.degree - h.degree, out)


@dataclass(frozen=True)
class CatalecticantMatrix:
    """Matrix of x^c ⋄ F for column monomials of degree i.

    Rows are indexed by monomial_basis(n, N - i) on the y-side and columns by
    monomial_basis(n, i) on the x-side; entry (r, c) is the coefficient of the
    row monomial in (column monomial ⋄ F).
    """
    F: GradedForm
    i: int
    matrix: ExactMatrix

    @property
    def row_monomials(self) -> Tuple[Monomial, ...]:
        return monomial_basis(self.F.n, self.F.degree - self.i)

    @property
    def col_monomials(self) -> Tuple[Monomial, ...]:
        return monomial_basis(self.F.n, self.i)


def catalecticant(F: GradedForm, i: int) -> CatalecticantMatrix:
    """The catalecticant matrix of F in column degree i; i = d gives D(F)."""
    if F.side != Side.Y:
        raise DegreeError("catalecticant matrices are built from y-side forms")
    if not 0 <= i <= F.degree:
        raise DegreeError(f"column degree {i} outside 0..{F.degree}")
    n = F.n
    rows = monomial_basis(n, F.degree - i)
    cols = monomial_basis(n, i)
    row_pos = monomial_index(n, F.degree - i)
    entries = [[Fraction(0)] * len(cols) for _ in rows]
    # x^gamma ⋄ c*y^alpha lands on y^(alpha-gamma) with weight alpha!/(alpha-gamma)!
    for c, gamma in enumerate(cols):
        for alpha, coeff in F.coefficients.items():
            if all(a >= g for a, g in zip(alpha, gamma)):
                beta = tuple(a - g for a, g in zip(alpha, gamma))
                entries[row_pos[beta]][c] += coeff * _falling(alpha, gamma)
    return CatalecticantMatrix(F, i, ExactMatrix.from_rows(entries, cols=len(cols)))


def annihilator_piece(F: GradedForm, j: int) -> List[GradedForm]:
    """Basis of F^⊥ ∩ C[x]_j, read off the kernel of the catalecticant in degree j."""
    cat = catalecticant(F, j)
    return [GradedForm.from_vector(Side.X, F.n, j, v) for v in kernel_basis(cat.matrix)]


def gorenstein_sequence(F: GradedForm) -> List[int]:
    """(t_0, ..., t_N) with t_i = rank of the catalecticant of F in degree i.

    Symmetry t_i = t_{N-i} holds for every form; it is checked here rather than
    used to halve the work.
    """
    if F.is_zero():
        raise PreconditionError("the Gorenstein sequence of the zero form is undefined")
    seq = [rank(catalecticant(F, i).matrix) for i in range(F.degree + 1)]
    if seq != seq[::-1]:
        raise AssertionError(f"catalecticant ranks are not symmetric: {seq}")
    return seq


def pairing_matrix(n: int, j: int) -> ExactMatrix:
    """Gram matrix of the pairing C[x]_j x C[y]_j in monomial bases (diag(alpha!))."""
    basis = monomial_basis(n, j)
    return ExactMatrix.from_rows(
        [[_falling(a, b) if a == b else 0 for b in basis] for a in basis], cols=len(basis)
    )


def span_equal(forms_a: Sequence[GradedForm], forms_b: Sequence[GradedForm],
               n: Optional[int] = None, degree: Optional[int] = None) -> bool:
    """Equality of linear spans of same-degree forms (basis independent)."""
    sample = list(forms_a) + list(forms_b)
    if n is None or degree is None:
        if not sample:
            return True
        n, degree = sample[0].n, sample[0].degree
    width = len(monomial_basis(n, degree))
    return same_span([f.vector() for f in forms_a], [f.vector() for f in forms_b], width)
