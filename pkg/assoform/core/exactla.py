"""Dense exact linear algebra over the rationals.

Rank, determinant and reduced row echelon forms are computed by sympy's
``DomainMatrix`` over ``QQ`` (Bareiss for determinants). Kernels and
solutions are read off the reduced echelon form, which is unique, so they
do not depend on pivoting. Matrices of :class:`JetScalar` entries go
through a Gauss-Jordan reduction of their own that pivots only on entries
with a nonzero value part; that is how first-order derivatives of
solutions are obtained exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import NoSolution

Number = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class JetScalar:
    """The element value + deriv*eps of Q[eps]/(eps^2)."""
    value: Fraction
    deriv: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "deriv", Fraction(self.deriv))

    @staticmethod
    def lift(x: Union["JetScalar", Number]) -> "JetScalar":
        return x if isinstance(x, JetScalar) else JetScalar(Fraction(x), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, (JetScalar, int, Fraction)):
            return NotImplemented
        o = JetScalar.lift(other)
        return JetScalar(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __neg__(self):
        return JetScalar(-self.value, -self.deriv)

    def __sub__(self, other):
        if not isinstance(other, (JetScalar, int, Fraction)):
            return NotImplemented
        o = JetScalar.lift(other)
        return JetScalar(self.value - o.value, self.deriv - o.deriv)

    def __rsub__(self, other):
        return JetScalar.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (JetScalar, int, Fraction)):
            return NotImplemented
        o = JetScalar.lift(other)
        return JetScalar(self.value * o.value, self.value * o.deriv + self.deriv * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (JetScalar, int, Fraction)):
            return NotImplemented
        o = JetScalar.lift(other)
        if o.value == 0:
            raise ZeroDivisionError("jet division by an element with zero value part")
        value = self.value / o.value
        return JetScalar(value, (self.deriv - value * o.deriv) / o.value)

    def __rtruediv__(self, other):
        return JetScalar.lift(other) / self

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.deriv)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = JetScalar.lift(other)
        if not isinstance(other, JetScalar):
            return NotImplemented
        return self.value == other.value and self.deriv == other.deriv

    def __hash__(self) -> int:
        return hash((self.value, self.deriv))

    def __repr__(self) -> str:
        return f"{self.value} + {self.deriv}ε"


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix of Fractions."""
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match declared shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: Optional[int] = None) -> "ExactMatrix":
        """Build from nested sequences; ``cols`` is required only for zero rows."""
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        width = cols if cols is not None else (len(data[0]) if data else 0)
        return cls(len(data), width, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]], rows: int) -> "ExactMatrix":
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "ExactMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.from_rows([[self.entries[i][j] for j in cols] for i in rows], cols=len(cols))

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        """Vertical concatenation."""
        if other.cols != self.cols:
            raise ValueError("cannot stack matrices with different column counts")
        return ExactMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return ExactMatrix.from_rows(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.entries],
            cols=other.cols,
        )

    def apply(self, vector: Sequence[Number]) -> List[Fraction]:
        """M · v."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((a * Fraction(b) for a, b in zip(r, vector)), Fraction(0)) for r in self.entries]

    def inverse(self) -> "ExactMatrix":
        """Exact inverse of a square nonsingular matrix."""
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        cols = [solve(self, [int(i == j) for i in range(self.rows)]) for j in range(self.cols)]
        return ExactMatrix.from_columns(cols, self.rows)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self.entries]


# ----------------------------------------------------------------------
# Rational matrices through sympy
# ----------------------------------------------------------------------

def to_sympy(x: Number):
    """A Fraction as a sympy Rational."""
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def from_sympy(value) -> Fraction:
    """A sympy rational number (or QQ element) as a Fraction."""
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def to_domain(M: ExactMatrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in r] for r in M.entries]
    return DomainMatrix(rows, (M.rows, M.cols), QQ)


def from_domain(D: DomainMatrix) -> ExactMatrix:
    nrows, ncols = D.shape
    S = D.to_Matrix()
    return ExactMatrix.from_rows([[from_sympy(S[i, j]) for j in range(ncols)] for i in range(nrows)], cols=ncols)


def rank(M: ExactMatrix) -> int:
    """Exact rank."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return int(to_domain(M).rank())


def det(M: ExactMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination over QQ."""
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return Fraction(1)
    return from_sympy(QQ.to_sympy(to_domain(M).det()))


def rref(M: ExactMatrix) -> Tuple[ExactMatrix, List[int]]:
    """Reduced row echelon form (pivot entries 1) and pivot columns."""
    if M.rows == 0 or M.cols == 0:
        return M, []
    reduced, pivots = to_domain(M).rref()
    return from_domain(reduced), [int(p) for p in pivots]


def kernel_basis(M: ExactMatrix) -> List[List[Fraction]]:
    """Basis of the right kernel.

    One vector per free column, in column order; the vector has 1 at its free
    column, 0 at every other free column, and the pivot coordinates follow
    from the reduced row echelon form.
    """
    reduced, pivots = rref(M)
    pivot_set = set(pivots)
    basis: List[List[Fraction]] = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i, free]
        basis.append(v)
    return basis


def solve(M: ExactMatrix, b: Sequence[Number]) -> List[Fraction]:
    """One exact solution of M v = b, with every free variable set to zero.

    Raises:
        NoSolution: If the system is inconsistent
    """
    if len(b) != M.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = ExactMatrix.from_rows([list(r) + [Fraction(x)] for r, x in zip(M.entries, b)], cols=M.cols + 1)
    reduced, pivots = rref(augmented)
    if M.cols in pivots:
        raise NoSolution("linear system is inconsistent")
    solution = [Fraction(0)] * M.cols
    for i, pc in enumerate(pivots):
        solution[pc] = reduced[i, M.cols]
    return solution


def same_span(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], width: int) -> bool:
    """Subspace equality by double inclusion: rank(a) == rank(b) == rank(a ∪ b)."""
    ra = rank(ExactMatrix.from_rows(a, cols=width))
    rb = rank(ExactMatrix.from_rows(b, cols=width))
    return ra == rb == rank(ExactMatrix.from_rows(list(a) + list(b), cols=width))


# ----------------------------------------------------------------------
# Gauss-Jordan reduction over jets
# ----------------------------------------------------------------------

def _gauss_jordan(rows: List[list], ncols: int, usable: Callable[[object], bool]) -> List[int]:
    """Reduce ``rows`` in place to reduced row echelon form on the first ``ncols`` columns.

    Entries beyond ``ncols`` (an augmented right-hand side) are carried along.

    Returns:
        Pivot columns; pivot row i holds pivot column pivots[i] with entry 1
    """
    nrows = len(rows)
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if usable(rows[i][col])), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return pivots


def naive_rank(M: ExactMatrix) -> int:
    """Rank by the hand-written reduction used for jets, on plain Fractions."""
    rows = [list(r) for r in M.entries]
    return len(_gauss_jordan(rows, M.cols, bool))


def jet_solve(rows: Sequence[Sequence[JetScalar]], b: Sequence[JetScalar]) -> List[JetScalar]:
    """Solve a jet system whose value part has full column rank.

    Pivots are taken only on entries with nonzero value part, so the result is
    the value solution together with its exact first-order variation.

    Raises:
        NoSolution: The system is inconsistent at value or at first order
    """
    ncols = len(rows[0]) if rows else 0
    zero = JetScalar(Fraction(0))
    work = [[JetScalar.lift(x) for x in r] + [JetScalar.lift(y)] for r, y in zip(rows, b)]
    pivots = _gauss_jordan(work, ncols, lambda x: x.value != 0)
    solution = [zero] * ncols
    for i, pc in enumerate(pivots):
        solution[pc] = work[i][ncols]
    for row in work[len(pivots):]:
        residual = sum((a * x for a, x in zip(row, solution)), zero) - row[ncols]
        if residual:
            raise NoSolution(f"jet system is inconsistent (residual {residual!r})")
    return solution


def jet_rank_matrix(M: Sequence[Sequence[JetScalar]]) -> int:
    """Rank of the eps-part of a matrix of jets."""
    derivs = [[JetScalar.lift(x).deriv for x in r] for r in M]
    cols = len(derivs[0]) if derivs else 0
    return rank(ExactMatrix.from_rows(derivs, cols=cols))
