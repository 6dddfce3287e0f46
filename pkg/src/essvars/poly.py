"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` lives over a :class:`VarContext`, an ordered tuple of
variable names.  Monomials are exponent tuples aligned with the context, and
the term order everywhere is lex with the first variable largest.
"""

import re
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, UnknownVariable, VariableClash
from .ratlin import as_rational

MINUS_INFINITY = float("-inf")
"""Degree of the zero polynomial."""

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(\[\d+\])?\Z")


class VarContext:
    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        if isinstance(other, VarContext):
            return self.names == other.names
        return NotImplemented

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarContext({list(self.names)!r})"

    @classmethod
    def indexed(cls, stem: str, count: int) -> "VarContext":
        """``stem[1] .. stem[count]``."""
        return cls(f"{stem}[{i}]" for i in range(1, count + 1))


def _ctx(context) -> VarContext:
    return context if isinstance(context, VarContext) else VarContext(context)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to Fractions."""

    __slots__ = ("context", "_terms")

    def __init__(self, context, terms: Mapping | Iterable = ()):
        self.context = _ctx(context)
        n = len(self.context)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != n or any((not isinstance(e, int)) or e < 0 for e in mono):
                raise ValueError(f"monomial {mono} does not fit a context of {n} variables")
            c = clean.get(mono, 0) + as_rational(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean

    # construction helpers

    @classmethod
    def zero(cls, context) -> "Polynomial":
        return cls(context)

    @classmethod
    def constant(cls, context, value) -> "Polynomial":
        context = _ctx(context)
        return cls(context, {(0,) * len(context): value})

    @classmethod
    def variable(cls, context, name: str) -> "Polynomial":
        context = _ctx(context)
        i = context.index(name)
        return cls(context, {tuple(int(j == i) for j in range(len(context))): 1})

    @classmethod
    def linear(cls, context, coefficients: Sequence) -> "Polynomial":
        """The linear form ``sum c_i x_i``."""
        context = _ctx(context)
        if len(coefficients) != len(context):
            raise ContextMismatch("coefficient vector does not match the context size")
        n = len(context)
        return cls(context, ((tuple(int(j == i) for j in range(n)), c) for i, c in enumerate(coefficients)))

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in lex-descending monomial order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def linear_coefficients(self) -> tuple:
        """Coefficient vector of a homogeneous degree-1 polynomial (or zero)."""
        if self._terms and (self.degree() != 1 or not self.is_homogeneous()):
            raise ValueError("not a linear form")
        n = len(self.context)
        return tuple(self.coefficient(tuple(int(j == i) for j in range(n))) for i in range(n))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.context == other.context and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.context, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.context, frozenset(self._terms.items())))

    def __repr__(self):
        from .parser import render
        return f"Polynomial({render(self)!r}, vars={list(self.context.names)!r})"

    def __str__(self):
        from .parser import render
        return render(self)

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.context != self.context:
                raise ContextMismatch(f"{self.context} vs {other.context}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.context, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.context, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.context, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.context, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial(self.context, {m: c * v for m, v in self._terms.items()})

    def with_context(self, context) -> "Polynomial":
        """Same terms over another context of the same size (variable renaming)."""
        context = _ctx(context)
        if len(context) != len(self.context):
            raise ContextMismatch("renaming requires contexts of equal size")
        return Polynomial(context, self._terms)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def scale(f: Polynomial, c) -> Polynomial:
    return f.scale(c)


def neg(f: Polynomial) -> Polynomial:
    return -f


def degree(f: Polynomial):
    return f.degree()


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def partial(f: Polynomial, i: int | str) -> Polynomial:
    if isinstance(i, str):
        i = f.context.index(i)
    out = {}
    for m, c in f._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial(f.context, out)


def apply_diff(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """Act on ``f`` by the differential monomial with exponents ``alpha``."""
    alpha = tuple(alpha)
    if len(alpha) != len(f.context):
        raise ContextMismatch("operator exponents do not match the context size")
    out = {}
    for m, c in f._terms.items():
        if all(b >= a for a, b in zip(alpha, m)):
            weight = prod(factorial(b) // factorial(b - a) for a, b in zip(alpha, m))
            out[tuple(b - a for a, b in zip(alpha, m))] = c * weight
    return Polynomial(f.context, out)


def substitute(f: Polynomial, images: Sequence[Polynomial], target=None) -> Polynomial:
    """Apply the ring map ``x_i -> images[i]``.

    ``target`` is only needed when ``images`` is empty.
    """
    if len(images) != len(f.context):
        raise ContextMismatch(f"need {len(f.context)} images, got {len(images)}")
    if images:
        target = images[0].context
        if any(g.context != target for g in images):
            raise ContextMismatch("images must share one context")
    elif target is None:
        raise ContextMismatch("target context is required for an empty substitution")
    target = _ctx(target)
    powers = [{0: Polynomial.constant(target, 1)} for _ in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = Polynomial.zero(target)
    for m, c in f._terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def homogenize(f: Polynomial, newvar: str) -> Polynomial:
    if newvar in f.context:
        raise VariableClash(f"variable {newvar!r} already in context")
    context = VarContext(f.context.names + (newvar,))
    d = f.degree() if f else 0
    return Polynomial(context, {m + (d - sum(m),): c for m, c in f._terms.items()})


def dehomogenize(f: Polynomial, var: str) -> Polynomial:
    i = f.context.index(var)
    context = VarContext(f.context.names[:i] + f.context.names[i + 1:])
    return Polynomial(context, ((m[:i] + m[i + 1:], c) for m, c in f._terms.items()))


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != len(f.context):
        raise ContextMismatch(f"point has {len(point)} coordinates, context has {len(f.context)}")
    point = [as_rational(v) for v in point]
    total = Fraction(0)
    for m, c in f._terms.items():
        total += c * prod((p ** e for p, e in zip(point, m)), start=Fraction(1))
    return total

