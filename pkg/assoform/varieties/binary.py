"""Binary forms: the image of A is cut out by the catalecticant.

For n = 2 every F of degree 2(d-1) lies in V, and F is an associated form
exactly when the square catalecticant in column degree d-1 is nonsingular.
"""

from fractions import Fraction

from ..algebra.apolar import catalecticant
from ..core.exactla import det
from ..core.polyring import GradedForm
from ..errors import DegreeError
from .catvar import form_degree_d, in_U_Res


def binary_catalecticant(F: GradedForm) -> Fraction:
    """det of the d x d catalecticant of a binary form of degree 2(d-1)."""
    if F.n != 2:
        raise DegreeError(f"the binary catalecticant takes forms in two variables, got {F.n}")
    d = form_degree_d(F)
    return det(catalecticant(F, d - 1).matrix)


def in_image_binary(F: GradedForm, cross_check: bool = True) -> bool:
    """Nonvanishing of the binary catalecticant, optionally checked against in_U_Res."""
    verdict = binary_catalecticant(F) != 0
    if cross_check and verdict != in_U_Res(F):
        raise AssertionError(f"catalecticant and U_Res disagree on {F!r}")
    return verdict
