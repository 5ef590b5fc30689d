"""Graded pieces of the complete-intersection algebra M(f) = C[x]/(f_1, ..., f_n).

Every ideal piece is the span of monomial multiples of the generators in a
single degree; all generators share degree d, so plain linear algebra in each
degree is complete and no Groebner bases are needed.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.exactla import ExactMatrix, JetScalar, jet_solve, rank, rref, solve
from ..core.polyring import (
    Coefficient, GradedForm, Side, basis_size, monomial_basis,
)
from ..errors import DegreeError, NoSolution, NotFiniteColength, SocleDegenerate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormTuple:
    """An n-tuple (f_1, ..., f_n) of x-side forms of common degree d in n variables."""
    forms: Tuple[GradedForm, ...]

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if not forms:
            raise DegreeError("a form tuple cannot be empty")
        n, d = forms[0].n, forms[0].degree
        if len(forms) != n:
            raise DegreeError(f"a tuple of forms in {n} variables needs {n} entries, got {len(forms)}")
        for f in forms:
            if f.side != Side.X or f.n != n or f.degree != d:
                raise DegreeError("tuple entries must be x-side forms sharing arity and degree")

    @classmethod
    def of(cls, *forms: GradedForm) -> "FormTuple":
        return cls(tuple(forms))

    @property
    def n(self) -> int:
        return self.forms[0].n

    @property
    def d(self) -> int:
        return self.forms[0].degree

    @property
    def socle_degree(self) -> int:
        """n(d-1)."""
        return self.n * (self.d - 1)

    def __iter__(self) -> Iterator[GradedForm]:
        return iter(self.forms)

    def __len__(self) -> int:
        return len(self.forms)

    def __getitem__(self, i: int) -> GradedForm:
        return self.forms[i]

    def transform(self, M: Sequence[Sequence[Coefficient]]) -> "FormTuple":
        """M·f, the tuple with entries sum_j M[i][j] f_j."""
        out = []
        for row in M:
            acc = GradedForm.zero(Side.X, self.n, self.d)
            for c, f in zip(row, self.forms):
                acc = acc + f.scale(c)
            out.append(acc)
        return FormTuple(tuple(out))

    def substitute(self, C: Sequence[Sequence[Coefficient]]) -> "FormTuple":
        """Change of variables x -> C x in every entry."""
        return FormTuple(tuple(f.substitute(C) for f in self.forms))

    def value_part(self) -> "FormTuple":
        """Drop first-order parts of jet coefficients."""
        return FormTuple(tuple(
            f.map_coefficients(lambda c: c.value if isinstance(c, JetScalar) else c)
            for f in self.forms
        ))

    @property
    def is_jet(self) -> bool:
        return any(isinstance(c, JetScalar) for f in self.forms for c in f.coefficients.values())


@dataclass(frozen=True)
class IdealPiece:
    """I_m = span{x^beta f_i : |beta| = m - d} as an echelon basis."""
    m: int
    n: int
    basis: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return basis_size(self.n, self.m) - self.dim

    def forms(self) -> List[GradedForm]:
        return [GradedForm.from_vector(Side.X, self.n, self.m, v) for v in self.basis]


def grad(f: GradedForm) -> FormTuple:
    """(df/dx_1, ..., df/dx_n) for an x-side form of degree >= 2."""
    if f.side != Side.X:
        raise DegreeError("grad takes an x-side form")
    if f.degree < 2:
        raise DegreeError(f"grad needs a form of degree at least 2, got {f.degree}")
    return FormTuple(tuple(f.derivative(k) for k in range(f.n)))


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def jacobian_det(ftuple: FormTuple) -> GradedForm:
    """det(df_i/dx_j), a form of degree n(d-1) (possibly zero)."""
    n = ftuple.n
    partials = [[f.derivative(j) for j in range(n)] for f in ftuple]
    total = GradedForm.zero(Side.X, n, n * (ftuple.d - 1))
    for perm in permutations(range(n)):
        term = GradedForm.monomial(Side.X, (0,) * n, _permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term.mul(partials[i][j])
            if term.is_zero():
                break
        if not term.is_zero():
            total = total + term
    return total


def ideal_generators(ftuple: FormTuple, m: int) -> List[GradedForm]:
    """x^beta f_i for |beta| = m - d, beta in grlex order, slot-major."""
    if m < ftuple.d:
        return []
    multipliers = monomial_basis(ftuple.n, m - ftuple.d)
    return [f.mul(GradedForm.monomial(Side.X, beta)) for f in ftuple for beta in multipliers]


def ideal_piece(ftuple: FormTuple, m: int) -> IdealPiece:
    """Echelon basis of the degree-m piece of (f_1, ..., f_n)."""
    gens = ideal_generators(ftuple.value_part(), m)
    width = basis_size(ftuple.n, m)
    if not gens:
        return IdealPiece(m, ftuple.n, ())
    reduced, pivots = rref(ExactMatrix.from_rows([g.vector() for g in gens], cols=width))
    return IdealPiece(m, ftuple.n, tuple(reduced.row(i) for i in range(len(pivots))))


def _ideal_rank(ftuple: FormTuple, m: int) -> int:
    gens = ideal_generators(ftuple, m)
    if not gens:
        return 0
    return rank(ExactMatrix.from_rows([g.vector() for g in gens], cols=basis_size(ftuple.n, m)))


def hilbert_function(ftuple: FormTuple, top: Optional[int] = None) -> List[int]:
    """(t_0, ..., t_top) with t_m = dim C[x]_m - dim I_m; top defaults to n(d-1)+1."""
    ftuple = ftuple.value_part()
    if top is None:
        top = ftuple.socle_degree + 1
    return [basis_size(ftuple.n, m) - _ideal_rank(ftuple, m) for m in range(top + 1)]


def expected_hilbert_function(n: int, d: int) -> List[int]:
    """Coefficients of (1 + x + ... + x^(d-1))^n."""
    coeffs = [1]
    for _ in range(n):
        nxt = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for k in range(d):
                nxt[i + k] += c
        coeffs = nxt
    return coeffs


def is_finite_colength(ftuple: FormTuple) -> bool:
    """Whether I_{n(d-1)+1} is all of C[x]_{n(d-1)+1}.

    The socle of M(f) sits in degree n(d-1) when M(f) is finite dimensional,
    so a nonzero quotient one degree higher means the algebra is infinite.
    """
    ftuple = ftuple.value_part()
    t = ftuple.socle_degree + 1
    return _ideal_rank(ftuple, t) == basis_size(ftuple.n, t)


def _top_system(ftuple: FormTuple) -> Tuple[List[List[Coefficient]], List[Coefficient]]:
    N = ftuple.socle_degree
    rows = [g.vector() for g in ideal_generators(ftuple, N)]
    rows.append(jacobian_det(ftuple).vector())
    rhs: List[Coefficient] = [Fraction(0)] * (len(rows) - 1) + [Fraction(1)]
    return rows, rhs


def socle_functional(ftuple: FormTuple) -> List[Coefficient]:
    """The functional phi on C[x]_{n(d-1)} with phi(I_N) = 0 and phi(jac) = 1.

    Coordinates follow monomial_basis(n, N). Tuples with jet coefficients give
    jet coordinates: the functional at the base point with its first-order
    variation.

    Raises:
        NotFiniteColength: The tuple has a common zero away from the origin
        SocleDegenerate: jac lies in I_N although the colength is finite
    """
    if not is_finite_colength(ftuple):
        raise NotFiniteColength(
            "resultant vanishes: the forms share a zero away from the origin, so M(f) is not finite dimensional"
        )
    rows, rhs = _top_system(ftuple)
    try:
        if ftuple.is_jet:
            return jet_solve(rows, rhs)
        width = basis_size(ftuple.n, ftuple.socle_degree)
        return solve(ExactMatrix.from_rows(rows, cols=width), rhs)
    except NoSolution as exc:
        raise SocleDegenerate("the Jacobian lies in the top-degree ideal piece") from exc


def normal_coordinate_top(ftuple: FormTuple, g: GradedForm) -> Coefficient:
    """The unique lambda with g ≡ lambda * jac(f) mod I_{n(d-1)}."""
    if g.side != Side.X or g.n != ftuple.n or g.degree != ftuple.socle_degree:
        raise DegreeError(f"expected an x-side form of degree {ftuple.socle_degree}")
    phi = socle_functional(ftuple)
    total: Coefficient = Fraction(0)
    for c, p in zip(g.vector(), phi):
        if c:
            total = total + c * p
    return total
