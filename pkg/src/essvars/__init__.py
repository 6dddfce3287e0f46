"""Essential variables of polynomials.

Given a form ``f``, the number of essential variables (the fewest linear
forms ``f`` can be written in) is the rank of its first catalecticant
matrix, and those linear forms span the ``(d-1)``-th partial derivatives
of ``f``.  This package computes both exactly over the rationals, rewrites
``f`` in them, and uses the count to detect cylinders.
"""

from .apolarity import (
    CatalecticantMatrix,
    DiffOperator,
    LinSpan,
    apolar_pair,
    catalecticant,
    derivative_span,
    monomial_basis,
    orthogonal_degree_one,
)
from .errors import *  # noqa: F401,F403
from .parser import ExprSource, parse, render, render_list
from .poly import (
    MINUS_INFINITY,
    Polynomial,
    VarContext,
    apply_diff,
    dehomogenize,
    evaluate,
    homogenize,
    partial,
    substitute,
)
from .ratlin import Matrix, complete_to_basis, invert, left_kernel, rank, rref
from .reduce import (
    ChangeOfVariables,
    CylinderReport,
    Presentation,
    detect_cylinder,
    ess_var,
    n_ess,
    new_presentation,
    verify_presentation,
)

__version__ = "0.1.0"
