import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from essvars import Polynomial, parse, substitute
from essvars.apolarity import monomial_basis

XYZ = ("x", "y", "z")
XYZT = ("x", "y", "z", "t")

CUBIC = "x^3 + x^2y - 2x^2z - 2xyz + xz^2 + yz^2"

# a quintic surface that is a cylinder, split by degree
SURFACE_F0 = "-1"
SURFACE_F2 = "x^2 - xy - 2y^2 - 3yz - z^2"
SURFACE_F5 = (
    "x^5 + 2x^4y - 2x^3y^2 - 8x^2y^3 - 7xy^4 - 2y^5 + 3x^4z - 18x^2y^2z - 24xy^3z"
    " - 9y^4z + 2x^3z^2 - 12x^2yz^2 - 30xy^2z^2 - 16y^3z^2 - 2x^2z^3 - 16xyz^3"
    " - 14y^2z^3 - 3xz^4 - 6yz^4 - z^5"
)
SURFACE = f"{SURFACE_F0} + {SURFACE_F2} + {SURFACE_F5}"
# printed presentation of f^h over (t, y + 2/3z, x + 1/3z)
SURFACE_G = (
    "-y[1]^5 - 2y[1]^3y[2]^2 - 2y[2]^5 - y[1]^3y[2]y[3] - 7y[2]^4y[3] + y[1]^3y[3]^2"
    " - 8y[2]^3y[3]^2 - 2y[2]^2y[3]^3 + 2y[2]y[3]^4 + y[3]^5"
)

# the four-variable cubic, split by degree
QUAD4_F0 = "3"
QUAD4_F1 = "-x - y + 2z + 3t"
QUAD4_F2 = "5x^2 + 10xy + 5y^2 - 20xz - 20yz + 20z^2 - 30xt - 30yt + 60zt + 45t^2"
QUAD4_F3 = (
    "x^3 + 3x^2y + 3xy^2 + y^3 - 6x^2z - 12xyz - 6y^2z + 12xz^2 + 12yz^2"
    " - 8z^3 - 9x^2t - 18xyt - 9y^2t + 36xzt + 36yzt - 36z^2t + 27xt^2 + 27yt^2"
    " - 54zt^2 - 27t^3"
)
QUAD4_Y1 = "x + y - 2z - 3t"


@pytest.fixture
def cubic():
    return parse(CUBIC, XYZ)


@pytest.fixture
def surface():
    return parse(SURFACE, XYZ)


def small_fraction(rng: random.Random, bound: int = 5, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_form(rng: random.Random, names, d: int, density: float = 0.6) -> Polynomial:
    terms = {m: small_fraction(rng) for m in monomial_basis(len(names), d) if rng.random() < density}
    return Polynomial(names, terms)


def random_poly(rng: random.Random, names, max_deg: int = 5, max_terms: int = 12) -> Polynomial:
    n = len(names)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_deg)
        mono = [0] * n
        for _ in range(d):
            mono[rng.randrange(n)] += 1
        terms[tuple(mono)] = small_fraction(rng, 9, 4)
    return Polynomial(names, terms)


def random_invertible(rng: random.Random, n: int):
    from essvars.ratlin import Matrix, rank

    while True:
        m = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)], n)
        if rank(m) == n:
            return m


def random_reducible_form(rng: random.Random, n: int, d: int) -> Polynomial:
    """A form in ``n`` variables that secretly lives in ``k <= n`` linear forms."""
    names = tuple(f"x{i}" for i in range(1, n + 1))
    k = rng.randint(1, n)
    inner = tuple(f"u{i}" for i in range(1, k + 1))
    while True:
        g = random_form(rng, inner, d)
        images = [Polynomial.linear(names, [rng.randint(-2, 2) for _ in range(n)]) for _ in range(k)]
        f = substitute(g, images)
        if f:
            return f


def linear_change(names, matrix):
    """Images of ``names`` under ``x -> A x`` as linear forms."""
    return [Polynomial.linear(names, row) for row in matrix.rows]


fractions_st = st.fractions(min_value=-10, max_value=10, max_denominator=6)


@st.composite
def polynomials(draw, names=("a", "b", "c", "d"), max_deg=5, max_terms=12):
    n = len(names)
    count = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(count):
        mono = tuple(draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n)))
        if sum(mono) > max_deg:
            continue
        terms[mono] = draw(fractions_st)
    return Polynomial(names, terms)


@st.composite
def forms(draw, n_max=4, d_max=5):
    n = draw(st.integers(1, n_max))
    d = draw(st.integers(1, d_max))
    names = tuple(f"x{i}" for i in range(1, n + 1))
    basis = monomial_basis(n, d)
    coeffs = draw(st.lists(fractions_st, min_size=len(basis), max_size=len(basis)))
    mask = draw(st.lists(st.booleans(), min_size=len(basis), max_size=len(basis)))
    return Polynomial(names, {m: c for m, c, keep in zip(basis, coeffs, mask) if keep})


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
