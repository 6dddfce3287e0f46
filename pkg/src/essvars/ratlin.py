"""Exact rational matrices.

Entries are :class:`fractions.Fraction`; every operation is pure and
returns a new :class:`Matrix`.  Elimination pivots on the first nonzero
entry, column by column, so results are deterministic.
"""

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DependentInput, Singular

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'a/b' string")
    return Fraction(value)


class Matrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(as_rational(v) for v in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected rows of length {ncols}")
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self._rows)
        return f"Matrix([{body}], ncols={self.ncols})"

    def transpose(self) -> "Matrix":
        return Matrix([[row[j] for row in self._rows] for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols = other.transpose().rows
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows],
            other.ncols,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._rows for v in row)

    def to_lists(self) -> list:
        return [list(row) for row in self._rows]


def vec_mat(v: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix."""
    if len(v) != m.nrows:
        raise ValueError("vector length does not match matrix rows")
    return tuple(sum((as_rational(a) * m[i, j] for i, a in enumerate(v)), Fraction(0)) for j in range(m.ncols))


class RrefResult(NamedTuple):
    reduced: Matrix
    rank: int
    pivot_cols: tuple


def _eliminate(rows: list, ncols: int, aug: list | None = None) -> list:
    # In-place Gauss-Jordan on lists of Fractions; returns pivot columns.
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            if aug is not None:
                aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [v * inv for v in rows[r]]
            if aug is not None:
                aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
                if aug is not None:
                    aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> RrefResult:
    rows = [list(row) for row in m.rows]
    pivots = _eliminate(rows, m.ncols)
    return RrefResult(Matrix(rows, m.ncols), len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def right_kernel(m: Matrix) -> list:
    """Canonical basis of ``{x : m x = 0}`` as tuples, in RREF form."""
    reduced, _, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r, fc]
        basis.append(v)
    if not basis:
        return []
    # The raw free-variable basis is not row reduced in general.
    canonical = rref(Matrix(basis, m.ncols)).reduced
    return [row for row in canonical.rows]


def left_kernel(m: Matrix) -> list:
    """Canonical basis of ``{a : a m = 0}``; ``nrows - rank`` vectors."""
    return right_kernel(m.transpose())


def complete_to_basis(rows: Sequence[Sequence], n: int | None = None) -> Matrix:
    """Append unit vectors (lowest index first) until ``rows`` spans Q^n."""
    vecs = [tuple(as_rational(v) for v in row) for row in rows]
    if n is None:
        if not vecs:
            raise ValueError("dimension is required when no rows are given")
        n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError(f"all rows must have length {n}")
    current = rank(Matrix(vecs, n)) if vecs else 0
    if current != len(vecs):
        raise DependentInput(f"{len(vecs)} rows span only a {current}-dimensional space")
    for i in range(n):
        if len(vecs) == n:
            break
        unit = tuple(Fraction(int(j == i)) for j in range(n))
        if rank(Matrix(vecs + [unit], n)) > len(vecs):
            vecs.append(unit)
    return Matrix(vecs, n)


def invert(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError(f"cannot invert a non-square {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    rows = [list(row) for row in m.rows]
    aug = [list(row) for row in Matrix.identity(n).rows]
    pivots = _eliminate(rows, n, aug)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}")
    return Matrix(aug, n)
