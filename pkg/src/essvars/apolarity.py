"""Differential operators acting on forms, and the first catalecticant.

Elements of ``T = Q[d_1, ..., d_n]`` are written as ordinary
:class:`Polynomial` objects over the same context as the forms they act on;
``d_i`` acts as the partial derivative in the i-th variable.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadOrder, ContextMismatch, DegreeMismatch, NotHomogeneous, ZeroDegree
from .poly import Polynomial, VarContext, apply_diff, partial
from .ratlin import Matrix, as_rational, left_kernel, rref


def monomial_basis(n: int, d: int) -> tuple:
    """Exponent vectors of degree ``d`` in ``n`` variables, lex descending."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in monomial_basis(n - 1, d - first))
    return tuple(out)


@dataclass(frozen=True)
class CatalecticantMatrix:
    matrix: Matrix
    row_labels: tuple  # variable names; row i holds d_i applied to f
    col_labels: tuple  # exponent vectors of degree d-1, lex descending

    @property
    def rank(self) -> int:
        return rref(self.matrix).rank


@dataclass(frozen=True)
class DiffOperator:
    """A degree-one operator ``sum a_i d_i``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(as_rational(a) for a in self.coefficients))

    def __call__(self, f: Polynomial) -> Polynomial:
        if len(self.coefficients) != len(f.context):
            raise ContextMismatch("operator size does not match the context")
        result = Polynomial.zero(f.context)
        for i, a in enumerate(self.coefficients):
            if a:
                result = result + partial(f, i).scale(a)
        return result


class LinSpan:
    """A subspace of linear forms, stored as the RREF rows of a spanning set."""

    __slots__ = ("context", "rows")

    def __init__(self, context, vectors: Sequence[Sequence] = ()):
        self.context = context if isinstance(context, VarContext) else VarContext(context)
        n = len(self.context)
        vectors = [tuple(as_rational(v) for v in vec) for vec in vectors]
        if any(len(v) != n for v in vectors):
            raise ContextMismatch("vector length does not match the context")
        if vectors:
            reduced, r, _ = rref(Matrix(vectors, n))
            self.rows = reduced.rows[:r]
        else:
            self.rows = ()

    @classmethod
    def from_forms(cls, context, forms: Sequence[Polynomial]) -> "LinSpan":
        context = context if isinstance(context, VarContext) else VarContext(context)
        if any(f.context != context for f in forms):
            raise ContextMismatch("form lives in a different context")
        return cls(context, [f.linear_coefficients() for f in forms])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def forms(self) -> list:
        return [Polynomial.linear(self.context, row) for row in self.rows]

    def contains(self, form) -> bool:
        vec = form.linear_coefficients() if isinstance(form, Polynomial) else tuple(form)
        return LinSpan(self.context, list(self.rows) + [vec]).dim == self.dim

    def __contains__(self, form):
        return self.contains(form)

    def __eq__(self, other):
        if not isinstance(other, LinSpan):
            return NotImplemented
        return self.context == other.context and self.rows == other.rows

    def __hash__(self):
        return hash((self.context, self.rows))

    def __repr__(self):
        from .parser import render_list
        return f"LinSpan({render_list(self.forms())})"


def _require_form(f: Polynomial):
    if not f.is_homogeneous():
        raise NotHomogeneous("expected a homogeneous polynomial (a form)")


def catalecticant(f: Polynomial) -> CatalecticantMatrix:
    _require_form(f)
    if f.is_zero() or f.degree() < 1:
        raise ZeroDegree("the catalecticant needs a form of degree at least 1")
    n, d = len(f.context), f.degree()
    basis = monomial_basis(n, d - 1)
    rows = []
    for i in range(n):
        di = partial(f, i)
        rows.append([di.coefficient(m) for m in basis])
    return CatalecticantMatrix(Matrix(rows, len(basis)), f.context.names, basis)


def orthogonal_degree_one(f: Polynomial) -> list:
    """Basis of the degree-one operators that annihilate ``f``."""
    cat = catalecticant(f)
    return [DiffOperator(v) for v in left_kernel(cat.matrix)]


def derivative_span(f: Polynomial, k: int):
    """Span of all order-``k`` partial derivatives of ``f``.

    For ``k = deg f - 1`` the derivatives are linear forms and a canonical
    :class:`LinSpan` is returned.  Any other order gives the raw list of
    nonzero derivatives ``d^alpha f`` with ``|alpha| = k``.
    """
    _require_form(f)
    d = f.degree()
    if f.is_zero() or not 0 <= k <= d:
        raise BadOrder(f"order {k} is outside 0..{d}")
    n = len(f.context)
    derivs = [apply_diff(f, alpha) for alpha in monomial_basis(n, k)]
    if k == d - 1:
        return LinSpan(f.context, [g.linear_coefficients() for g in derivs])
    return [g for g in derivs if g]


def apolar_pair(f: Polynomial, op: Polynomial) -> Fraction:
    """The scalar ``op o f`` for a form and an operator of the same degree.

    ``op`` is a polynomial whose variable ``x_i`` stands for ``d_i``.
    """
    if f.context != op.context:
        raise ContextMismatch("form and operator must share a context")
    if not f.is_homogeneous() or not op.is_homogeneous():
        raise NotHomogeneous("pairing is defined on homogeneous pieces")
    if f and op and f.degree() != op.degree():
        raise DegreeMismatch(f"degree {f.degree()} form paired with degree {op.degree()} operator")
    total = Fraction(0)
    for alpha, c in op.terms.items():
        total += c * apply_diff(f, alpha).coefficient((0,) * len(f.context))
    return total
