"""The associated form of a tuple and of a single form.

For f = (f_1, ..., f_n) with nonvanishing resultant, the associated form is

    A(f) = sum_{|alpha| = N} multinomial(N, alpha) * lambda_alpha * y^alpha,

where N = n(d-1) and lambda_alpha is the coefficient of x^alpha against
jac(f) in the one-dimensional socle of M(f). The normalization against jac
is kept exactly; proportionality helpers live in ``varieties.catvar``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from ..core.exactla import ExactMatrix, JetScalar, det, jet_rank_matrix
from ..core.polyring import GradedForm, Side, monomial_basis, multinomial
from ..errors import DegreeError, PreconditionError
from .apolar import annihilator_piece, gorenstein_sequence, span_equal
from .quotalg import FormTuple, expected_hilbert_function, grad, socle_functional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AssociatedForm:
    """A y-side form of degree n(d-1) together with the tuple it came from."""
    F: GradedForm
    source: FormTuple

    def is_inverse_system(self) -> bool:
        """Whether F^⊥ in degree d is spanned by the source forms."""
        return span_equal(annihilator_piece(self.F, self.source.d), list(self.source),
                          n=self.source.n, degree=self.source.d)

    def has_expected_gorenstein_sequence(self) -> bool:
        return gorenstein_sequence(self.F) == expected_hilbert_function(self.source.n, self.source.d)


def associated_form_tuple(ftuple: FormTuple) -> AssociatedForm:
    """A(f) for a tuple with nonvanishing resultant.

    Jet coefficients are accepted; the result then carries the first-order
    variation of A along the jet direction.

    Raises:
        NotFiniteColength: The forms share a zero away from the origin
    """
    phi = socle_functional(ftuple)
    N = ftuple.socle_degree
    coeffs = {
        alpha: coord * multinomial(N, alpha)
        for alpha, coord in zip(monomial_basis(ftuple.n, N), phi)
        if coord
    }
    return AssociatedForm(GradedForm(Side.Y, ftuple.n, N, coeffs), ftuple)


def associated_form(f: GradedForm) -> AssociatedForm:
    """A(f) = A(grad f) for an x-side form of degree d + 1 >= 3.

    Nondegeneracy of f is tested as finite colength of its Milnor algebra.
    """
    if f.degree < 3:
        raise DegreeError(f"associated forms are defined for degree >= 3, got {f.degree}")
    return associated_form_tuple(grad(f))


def direction_tuples(n: int, d: int) -> List[FormTuple]:
    """The K*n tuples with a single monomial in one slot, slot-major in grlex order."""
    zero = GradedForm.zero(Side.X, n, d)
    out = []
    for slot in range(n):
        for mono in monomial_basis(n, d):
            forms = [zero] * n
            forms[slot] = GradedForm.monomial(Side.X, mono)
            out.append(FormTuple(tuple(forms)))
    return out


def jet_tuple(ftuple: FormTuple, direction: FormTuple) -> FormTuple:
    """f + eps * direction with JetScalar coefficients."""
    forms = []
    for f, g in zip(ftuple, direction):
        coeffs = {m: JetScalar(c) for m, c in f.coefficients.items()}
        for m, c in g.coefficients.items():
            base = coeffs.get(m, JetScalar(Fraction(0)))
            coeffs[m] = JetScalar(base.value, base.deriv + c)
        forms.append(GradedForm(Side.X, f.n, f.degree, coeffs))
    return FormTuple(tuple(forms))


def associated_form_derivative(ftuple: FormTuple, direction: FormTuple) -> GradedForm:
    """The first-order variation of A at f along ``direction``."""
    jet = associated_form_tuple(jet_tuple(ftuple, direction)).F
    return jet.map_coefficients(lambda c: JetScalar.lift(c).deriv)


def differential_rank(ftuple: FormTuple) -> int:
    """Rank of the differential of A at f, from K*n jet evaluations.

    Raises:
        NotFiniteColength: Resultant of f vanishes
    """
    n, N = ftuple.n, ftuple.socle_degree
    columns = []
    for k, direction in enumerate(direction_tuples(n, ftuple.d)):
        jet = associated_form_tuple(jet_tuple(ftuple, direction)).F
        zero = JetScalar(Fraction(0))
        columns.append([jet.coefficients.get(m, zero) for m in monomial_basis(n, N)])
        logger.debug("differential column %d of %d", k + 1, n * len(monomial_basis(n, ftuple.d)))
    rows = [list(r) for r in zip(*columns)]
    return jet_rank_matrix(rows)


def expected_dimension(n: int, d: int) -> int:
    """K*n - n^2 + 1, the dimension of the image of A."""
    return len(monomial_basis(n, d)) * n - n * n + 1


def tuple_basis_covariance_check(ftuple: FormTuple, M: Sequence[Sequence[Fraction]]) -> bool:
    """Whether A(M·f) == det(M)^-1 · A(f) holds exactly."""
    matrix = ExactMatrix.from_rows(M, cols=ftuple.n)
    scale = det(matrix)
    if scale == 0:
        raise PreconditionError("covariance needs an invertible matrix")
    left = associated_form_tuple(ftuple.transform(matrix.to_lists())).F
    right = associated_form_tuple(ftuple).F.scale(1 / scale)
    return left == right
