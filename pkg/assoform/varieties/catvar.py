"""Membership in the catalecticant varieties and the constructive inverse of A.

For F of degree N = n(d-1), D(F) is the L x K catalecticant matrix in
column degree d. The loci are

- V: rank D(F) <= K - n
- U: rank D(F) == K - n
- Gor(T): the Gorenstein sequence of F is T = coefficients of (1 + ... + x^(d-1))^n
- Z: forms in U whose degree-d annihilator has a common zero away from the origin
- U_Res = U minus Z, the image of the associated form map

A chart is a pair of (K-n)-subsets of rows and columns with a nonzero minor.
Charts are ordered lexicographically by rows, then by columns.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..algebra.apolar import annihilator_piece, catalecticant, gorenstein_sequence
from ..algebra.assocform import associated_form_tuple
from ..algebra.quotalg import FormTuple, expected_hilbert_function
from ..algebra.resultant import resultant_nonvanishing
from ..core.exactla import ExactMatrix, det, rank, rref, solve
from ..core.polyring import GradedForm, Side, basis_size
from ..core.textio import form_to_model, render_form
from ..errors import ChartNotFound, DegreeError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChartId:
    """Row and column index subsets (each of size K - n) of D(F)."""
    row_subset: Tuple[int, ...]
    col_subset: Tuple[int, ...]

    def to_dict(self) -> Dict[str, List[int]]:
        return {"row_subset": list(self.row_subset), "col_subset": list(self.col_subset)}


@dataclass(frozen=True)
class MembershipCertificate:
    """Verifiable record of a membership decision."""
    F: GradedForm
    d: int
    rank_D: int
    kernel_dim: int
    gorenstein_seq: Optional[List[int]] = None
    chart: Optional[ChartId] = None
    chart_resultant_nonzero: Optional[bool] = None
    verdicts: Dict[str, bool] = field(default_factory=dict)

    def consistent(self) -> bool:
        """The inclusions U_Res ⊂ Gor(T) ⊂ U ⊂ V, and U_Res excludes Z."""
        v = self.verdicts
        if v["U_Res"] and not (v["U"] and not v["Z"] and v["GorT"]):
            return False
        if v["GorT"] and not v["U"]:
            return False
        return not (v["U"] and not v["V"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "F": render_form(self.F),
            "form": form_to_model(self.F).model_dump(mode="json"),
            "n": self.F.n,
            "d": self.d,
            "rank_D": self.rank_D,
            "kernel_dim": self.kernel_dim,
            "gorenstein_seq": self.gorenstein_seq,
            "chart": self.chart.to_dict() if self.chart else None,
            "chart_resultant_nonzero": self.chart_resultant_nonzero,
            "verdicts": dict(self.verdicts),
        }


def form_degree_d(F: GradedForm) -> int:
    """The d with deg F = n(d-1).

    Raises:
        DegreeError: F is not a y-side form of such a degree with d >= 2
    """
    if F.side != Side.Y:
        raise DegreeError("catalecticant varieties live in the y-side ring")
    if F.degree % F.n != 0 or F.degree // F.n < 1:
        raise DegreeError(f"degree {F.degree} is not n(d-1) for n={F.n} and some d >= 2")
    return F.degree // F.n + 1


def _target_rank(F: GradedForm) -> int:
    return basis_size(F.n, form_degree_d(F)) - F.n


def catalecticant_D(F: GradedForm) -> ExactMatrix:
    """D(F), the catalecticant in column degree d."""
    return catalecticant(F, form_degree_d(F)).matrix


def in_V(F: GradedForm) -> bool:
    return rank(catalecticant_D(F)) <= _target_rank(F)


def in_U(F: GradedForm) -> bool:
    return rank(catalecticant_D(F)) == _target_rank(F)


def target_sequence(F: GradedForm) -> List[int]:
    """T for the (n, d) of F."""
    return expected_hilbert_function(F.n, form_degree_d(F))


def in_GorT(F: GradedForm) -> bool:
    if F.is_zero():
        return False
    return gorenstein_sequence(F) == target_sequence(F)


def in_GorT_le(F: GradedForm) -> bool:
    """Gorenstein sequence bounded by T entrywise."""
    if F.is_zero():
        return True
    return all(t <= bound for t, bound in zip(gorenstein_sequence(F), target_sequence(F)))


# ----------------------------------------------------------------------
# Charts
# ----------------------------------------------------------------------

def _independent_rows(M: ExactMatrix) -> List[int]:
    """Lexicographically first maximal independent set of rows."""
    _, pivots = rref(M.transpose())
    return pivots


def principal_chart(F: GradedForm) -> ChartId:
    """The first chart in lexicographic order.

    The first row subset carrying a nonzero minor is the greedy independent
    row set; within it the same holds for columns.

    Raises:
        ChartNotFound: F is not in U
    """
    D = catalecticant_D(F)
    k = _target_rank(F)
    if rank(D) != k:
        raise ChartNotFound(f"rank D(F) = {rank(D)}, expected {k}")
    rows = _independent_rows(D)
    _, cols = rref(D.submatrix(rows, range(D.cols)))
    chart = ChartId(tuple(rows), tuple(cols))
    logger.debug("chart rows=%s cols=%s", chart.row_subset, chart.col_subset)
    return chart


def iter_charts(F: GradedForm) -> Iterator[ChartId]:
    """Every chart of F in lexicographic (rows, then columns) order."""
    D = catalecticant_D(F)
    k = _target_rank(F)
    if k > D.rows:
        return
    for rows in combinations(range(D.rows), k):
        for cols in combinations(range(D.cols), k):
            if det(D.submatrix(rows, cols)) != 0:
                yield ChartId(rows, cols)


def kernel_basis_on_chart(F: GradedForm, chart: ChartId) -> List[GradedForm]:
    """r_1, ..., r_n: kernel vectors of D(F) equal to e_j on the non-chart columns.

    With A = D[rows, chart cols] and B = D[rows, other cols], the vector for
    the j-th other column is -A^{-1} B e_j on the chart columns.
    """
    D = catalecticant_D(F)
    d = form_degree_d(F)
    A = D.submatrix(chart.row_subset, chart.col_subset)
    free = [c for c in range(D.cols) if c not in set(chart.col_subset)]
    forms = []
    for c in free:
        rhs = [-x for x in D.submatrix(chart.row_subset, [c]).column(0)]
        gamma = solve(A, rhs)
        v = [Fraction(0)] * D.cols
        v[c] = Fraction(1)
        for pos, value in zip(chart.col_subset, gamma):
            v[pos] = value
        forms.append(GradedForm.from_vector(Side.X, F.n, d, v))
    return forms


def chart_kernel_basis(F: GradedForm) -> Tuple[ChartId, List[GradedForm]]:
    """The principal chart of F and its canonical kernel basis."""
    chart = principal_chart(F)
    return chart, kernel_basis_on_chart(F, chart)


def chart_resultant_nonzero(F: GradedForm, chart: Optional[ChartId] = None) -> bool:
    """Nonvanishing of the resultant of the chart basis."""
    if chart is None:
        chart = principal_chart(F)
    return resultant_nonvanishing(FormTuple(tuple(kernel_basis_on_chart(F, chart))))


def in_Z(F: GradedForm) -> bool:
    """Whether the chart resultant vanishes; requires F in U."""
    if not in_U(F):
        raise PreconditionError("Z is defined inside U only")
    return not chart_resultant_nonzero(F)


def in_U_Res_via_annihilator(F: GradedForm) -> bool:
    """dim F^⊥_d == n and the kernel basis of D(F) has nonvanishing resultant."""
    d = form_degree_d(F)
    basis = annihilator_piece(F, d)
    if len(basis) != F.n:
        return False
    return resultant_nonvanishing(FormTuple(tuple(basis)))


def in_U_Res(F: GradedForm) -> bool:
    """Membership in the image of A, decided on the principal chart.

    The annihilator route is evaluated as well and must agree.
    """
    via_chart = in_U(F) and chart_resultant_nonzero(F)
    via_annihilator = in_U_Res_via_annihilator(F)
    if via_chart != via_annihilator:
        raise AssertionError(
            f"chart and annihilator membership disagree for {render_form(F)}: "
            f"{via_chart} vs {via_annihilator}"
        )
    return via_chart


def certify(F: GradedForm) -> MembershipCertificate:
    """Every computable verdict for F with the data it rests on."""
    D = catalecticant_D(F)
    rank_D = rank(D)
    u = rank_D == _target_rank(F)
    chart = principal_chart(F) if u else None
    chart_ok = chart_resultant_nonzero(F, chart) if chart else None
    seq = gorenstein_sequence(F) if not F.is_zero() else None
    verdicts = {
        "V": rank_D <= _target_rank(F),
        "U": u,
        "GorT": seq == target_sequence(F) if seq is not None else False,
        "Z": bool(u and not chart_ok),
        "U_Res": bool(u and chart_ok),
    }
    if verdicts["U_Res"] != in_U_Res_via_annihilator(F):
        raise AssertionError(f"chart and annihilator membership disagree for {render_form(F)}")
    cert = MembershipCertificate(F, form_degree_d(F), rank_D, D.cols - rank_D,
                                 seq, chart, chart_ok, verdicts)
    if not cert.consistent():
        raise AssertionError(f"inconsistent verdicts {verdicts} for {render_form(F)}")
    return cert


# ----------------------------------------------------------------------
# Inverse of A
# ----------------------------------------------------------------------

def proportional(F: GradedForm, G: GradedForm) -> Optional[Fraction]:
    """The nonzero mu with G == mu * F, or None."""
    if (F.side, F.n, F.degree) != (G.side, G.n, G.degree):
        raise DegreeError("proportionality needs forms of the same shape")
    if F.is_zero() or G.is_zero():
        return Fraction(1) if F.is_zero() and G.is_zero() else None
    lead, coeff = next(F.terms())
    mu = G.coefficient(lead) / coeff
    if mu == 0 or F.scale(mu) != G:
        return None
    return mu


def recover_tuple(F: GradedForm, normalize: bool = False) -> FormTuple:
    """A tuple f spanning F^⊥ in degree d with A(f) proportional to F.

    Args:
        F: Form in U_Res
        normalize: Rescale the first entry so that A(f) == F exactly

    Raises:
        PreconditionError: F is not in the image of A
    """
    if not in_U_Res(F):
        raise PreconditionError(f"{render_form(F)} is not in the image of the associated form map")
    _, basis = chart_kernel_basis(F)
    ftuple = FormTuple(tuple(basis))
    if not normalize:
        return ftuple
    mu = proportional(associated_form_tuple(ftuple).F, F)
    if mu is None:
        raise AssertionError("recovered tuple does not reproduce F up to scale")
    # A(M f) = det(M)^-1 A(f) with M = diag(1/mu, 1, ..., 1)
    scaling = [[Fraction(int(i == j)) for j in range(F.n)] for i in range(F.n)]
    scaling[0][0] = 1 / mu
    return ftuple.transform(scaling)
