"""Seeded random forms, tuples and matrices.

All randomness comes from a numpy ``Generator`` over PCG64, so a seed fixes
every sample on every platform. Integer coefficients are drawn uniformly
from [-height, height].
"""

import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from ..algebra.quotalg import FormTuple
from ..algebra.resultant import default_rng, resultant_nonvanishing
from ..core.exactla import ExactMatrix, det
from ..core.polyring import GradedForm, Side, monomial_basis
from ..errors import GenericityFailure

logger = logging.getLogger(__name__)

DEFAULT_HEIGHT = 9
MAX_ATTEMPTS = 10_000


def make_rng(seed: int) -> np.random.Generator:
    return default_rng(seed)


def random_form(rng: np.random.Generator, side: Side, n: int, degree: int,
                height: int = DEFAULT_HEIGHT) -> GradedForm:
    basis = monomial_basis(n, degree)
    coeffs = rng.integers(-height, height + 1, size=len(basis))
    return GradedForm(side, n, degree, {m: int(c) for m, c in zip(basis, coeffs)})


def random_tuple(rng: np.random.Generator, n: int, d: int, height: int = DEFAULT_HEIGHT) -> FormTuple:
    return FormTuple(tuple(random_form(rng, Side.X, n, d, height) for _ in range(n)))


def sample_good_tuple(rng: np.random.Generator, n: int, d: int, height: int = DEFAULT_HEIGHT,
                      max_attempts: int = MAX_ATTEMPTS) -> FormTuple:
    """A random tuple with nonvanishing resultant, by rejection.

    Raises:
        GenericityFailure: No accepted sample within ``max_attempts`` draws
    """
    for attempt in range(1, max_attempts + 1):
        ftuple = random_tuple(rng, n, d, height)
        if resultant_nonvanishing(ftuple):
            if attempt > 1:
                logger.debug("accepted tuple after %d draws", attempt)
            return ftuple
    raise GenericityFailure(f"no tuple with nonvanishing resultant in {max_attempts} draws (n={n}, d={d})")


def degenerate_tuple(rng: np.random.Generator, n: int, d: int, height: int = DEFAULT_HEIGHT) -> FormTuple:
    """A random tuple whose forms all vanish at a random nonzero integer point."""
    point: List[int] = [0] * n
    while not any(point):
        point = [int(v) for v in rng.integers(-3, 4, size=n)]
    k = next(i for i, v in enumerate(point) if v)
    pivot = GradedForm.monomial(Side.X, tuple(d if i == k else 0 for i in range(n)))
    forms = []
    for _ in range(n):
        f = random_form(rng, Side.X, n, d, height)
        forms.append(f - pivot.scale(f.evaluate(point) / Fraction(point[k]) ** d))
    return FormTuple(tuple(forms))


def random_invertible_matrix(rng: np.random.Generator, n: int, height: int = 3,
                             max_attempts: int = MAX_ATTEMPTS) -> List[List[Fraction]]:
    """A random integer matrix with nonzero determinant."""
    for _ in range(max_attempts):
        rows = [[Fraction(int(v)) for v in rng.integers(-height, height + 1, size=n)] for _ in range(n)]
        if det(ExactMatrix.from_rows(rows, cols=n)) != 0:
            return rows
    raise GenericityFailure(f"no invertible {n}x{n} matrix in {max_attempts} draws")


def inverse_transpose(C: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    return ExactMatrix.from_rows(C).inverse().transpose().to_lists()
