"""Essential variables of a form and its presentation in them.

The number of essential variables is the rank of the first catalecticant,
and the essential variables span the linear forms obtained as order
``d-1`` partial derivatives.  :func:`new_presentation` completes a basis of
that span to a basis of all linear forms, inverts the resulting change of
coordinates, and rewrites the form in the new coordinates; the
complementary coordinates never survive.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .apolarity import LinSpan, catalecticant, derivative_span
from .errors import BadOverride, InternalInconsistency, NotHomogeneous, ZeroPolynomial
from .poly import Polynomial, VarContext, evaluate, homogenize, substitute
from .ratlin import Matrix, complete_to_basis, invert, rank, right_kernel


@dataclass(frozen=True)
class ChangeOfVariables:
    """``forward`` rows give y_1..y_r, z_1..z_{n-r} in the old variables;
    ``backward`` rows give each old variable in the new ones."""

    forward: Matrix
    backward: Matrix
    new_context: VarContext

    def images(self) -> list:
        """Each old variable as a linear form over ``new_context``."""
        return [Polynomial.linear(self.new_context, row) for row in self.backward.rows]


@dataclass(frozen=True)
class Presentation:
    g: Polynomial
    essential_forms: tuple
    change: ChangeOfVariables | None

    @property
    def r(self) -> int:
        return len(self.essential_forms)


@dataclass(frozen=True)
class CylinderReport:
    is_cylinder: bool
    n_ess_h: int
    essential_forms_h: LinSpan
    homogenizing_var: str
    homogenized: Polynomial
    ruling_direction: tuple | None = None
    ruling_basis: tuple = ()
    reduced: Presentation | None = None
    notes: tuple = field(default=())


def _require_form(f: Polynomial):
    if not f.is_homogeneous():
        raise NotHomogeneous("expected a homogeneous polynomial (a form); homogenize it first")


def n_ess(f: Polynomial) -> int:
    _require_form(f)
    if f.is_constant():
        return 0
    return catalecticant(f).rank


def ess_var(f: Polynomial) -> LinSpan:
    _require_form(f)
    if f.is_constant():
        return LinSpan(f.context)
    return derivative_span(f, f.degree() - 1)


def _override_rows(f: Polynomial, basis: Sequence, span: LinSpan) -> list:
    rows = []
    for form in basis:
        if not isinstance(form, Polynomial):
            rows.append(tuple(Fraction(v) for v in form))
            continue
        if form.context != f.context:
            raise BadOverride(f"basis form {form} is not over {list(f.context.names)}")
        try:
            rows.append(form.linear_coefficients())
        except ValueError:
            raise BadOverride(f"basis element {form} is not a linear form") from None
    if any(len(row) != len(f.context) for row in rows):
        raise BadOverride("basis vector length does not match the context")
    if rows and rank(Matrix(rows, len(f.context))) != len(rows):
        raise BadOverride("basis forms are linearly dependent")
    if LinSpan(f.context, rows) != span:
        raise BadOverride(f"basis does not span the essential variables (dimension {span.dim})")
    return rows


def new_presentation(f: Polynomial, basis_override: Sequence | None = None) -> Presentation:
    """Rewrite the form ``f`` as ``g(y[1], ..., y[r])`` with ``r = n_ess(f)``.

    ``basis_override`` picks the essential forms y_i (it must be a basis of
    ``ess_var(f)``); by default the canonical row-reduced basis is used.
    """
    span = ess_var(f)
    n = len(f.context)
    if basis_override is None:
        rows = list(span.rows)
    else:
        rows = _override_rows(f, basis_override, span)
    r = len(rows)

    forward = complete_to_basis(rows, n)
    backward = invert(forward)
    ys = VarContext.indexed("y", r)
    new_context = VarContext(ys.names + VarContext.indexed("z", n - r).names)
    change = ChangeOfVariables(forward, backward, new_context)

    rewritten = substitute(f, change.images(), target=new_context)
    if any(any(m[r:]) for m in rewritten.terms):
        raise InternalInconsistency("a complementary variable survived the change of coordinates")
    g = Polynomial(ys, ((m[:r], c) for m, c in rewritten.terms.items()))

    forms = tuple(Polynomial.linear(f.context, row) for row in rows)
    presentation = Presentation(g, forms, change)
    if not verify_presentation(f, presentation):
        raise InternalInconsistency("presentation does not reproduce the input")
    return presentation


def verify_presentation(f: Polynomial, p: Presentation) -> bool:
    """Check ``g(essential_forms) == f`` exactly."""
    if len(p.essential_forms) != len(p.g.context):
        return False
    if any(form.context != f.context for form in p.essential_forms):
        return False
    return substitute(p.g, list(p.essential_forms), target=f.context) == f


def fresh_name(context: VarContext, preferred: str = "t") -> str:
    if preferred not in context:
        return preferred
    k = 1
    while f"{preferred}{k}" in context:
        k += 1
    return f"{preferred}{k}"


def primitive_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Integer multiple of ``v`` with coprime entries and a positive leading entry."""
    scale = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * scale) for x in v]
    g = gcd(*ints) or 1
    lead = next((x for x in ints if x), 1)
    sign = -1 if lead < 0 else 1
    return tuple(sign * x // g for x in ints)


def detect_cylinder(f: Polynomial, homogenizing_var: str | None = None) -> CylinderReport:
    """Decide whether the hypersurface ``f = 0`` is a cylinder.

    The test is ``n_ess(f^h) <= n`` for the homogenization ``f^h``.  When the
    essential forms of ``f^h``, with the homogenizing coordinate dropped,
    have a one-dimensional common kernel, that kernel vector is reported as
    the direction of the ruling lines.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    n = len(f.context)
    t = homogenizing_var or fresh_name(f.context)
    fh = homogenize(f, t)
    span = ess_var(fh)
    r = span.dim
    is_cylinder = r <= n

    notes = []
    direction = None
    kernel = ()
    if is_cylinder:
        affine_rows = [row[:n] for row in span.rows]
        kernel = tuple(right_kernel(Matrix(affine_rows, n))) if affine_rows else tuple(
            Matrix.identity(n).rows
        )
        if len(kernel) == 1:
            direction = primitive_vector(kernel[0])
        elif not kernel:
            notes.append("no ruling direction: the affine parts of the essential forms span everything")
        else:
            notes.append(f"ruled by parallel {len(kernel)}-planes; no single direction")
        if r < n:
            notes.append(f"n_ess(f^h) = {r} is below the ambient dimension {n}")

    return CylinderReport(
        is_cylinder=is_cylinder,
        n_ess_h=r,
        essential_forms_h=span,
        homogenizing_var=t,
        homogenized=fh,
        ruling_direction=direction,
        ruling_basis=kernel,
        reduced=new_presentation(fh),
        notes=tuple(notes),
    )


def is_translation_invariant(f: Polynomial, direction: Sequence, points: Sequence) -> bool:
    """Spot check ``f(p + s v) == f(p)`` for the given ``(p, s)`` pairs."""
    for p, s in points:
        shifted = [Fraction(a) + Fraction(s) * Fraction(b) for a, b in zip(p, direction)]
        if evaluate(f, shifted) != evaluate(f, p):
            return False
    return True
