"""Reading and writing polynomials in a compact text syntax.

Grammar::

    expr        := ['+' | '-'] term (('+' | '-') term)*
    term        := factor ('*'? factor)*
    factor      := coefficient | var ['^' natural] | '(' expr ')' ['^' natural]
    coefficient := integer ['/' positive-integer]
    var         := identifier ['[' natural ']']

Products may be written by juxtaposition, so ``2x^2y`` is ``2*x^2*y``.  A
run of letters such as ``xyz`` is split against the declared variable list,
longest name first.  Without a declared list each letter (plus any trailing
digits or ``[k]`` index) is one variable: ``x1x2`` is ``x1*x2``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError, UndeclaredVariable, ZeroDenominator
from .poly import Polynomial, VarContext

_RUN = re.compile(r"(?:[A-Za-z_][A-Za-z0-9_]*(?:\[\d+\])?)+")
_IMPLICIT_NAME = re.compile(r"[A-Za-z_][0-9]*(?:\[\d+\])?")
_NUMBER = re.compile(r"\d+")
_PUNCT = set("+-*/^()")


@dataclass(frozen=True)
class ExprSource:
    text: str
    declared_vars: tuple | None = None


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "var", one of _PUNCT, or "end"
    value: object
    pos: int


def _split_run(run: str, start: int, declared: Sequence[str] | None, text: str) -> list:
    tokens = []
    i = 0
    while i < len(run):
        if declared is None:
            m = _IMPLICIT_NAME.match(run, i)
            tokens.append(_Token("var", m.group(), start + i))
            i = m.end()
            continue
        best = max((name for name in declared if run.startswith(name, i)), key=len, default=None)
        if best is not None:
            tokens.append(_Token("var", best, start + i))
            i += len(best)
        elif run[i].isdigit():
            m = _NUMBER.match(run, i)
            tokens.append(_Token("num", int(m.group()), start + i))
            i = m.end()
        else:
            name = _IMPLICIT_NAME.match(run, i).group()
            raise UndeclaredVariable(f"undeclared variable {name!r}", start + i, text)
    return tokens


def tokenize(text: str, declared: Sequence[str] | None = None) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
        elif ch.isdigit():
            m = _NUMBER.match(text, i)
            tokens.append(_Token("num", int(m.group()), i))
            i = m.end()
        elif ch.isalpha() or ch == "_":
            m = _RUN.match(text, i)
            tokens.extend(_split_run(m.group(), i, declared, text))
            i = m.end()
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, context, text):
        self.tokens = tokens
        self.context = context
        self.text = text
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "end" else repr(str(tok.value))
        raise ParseError(f"{message}, found {found}", tok.pos, self.text)

    def expect(self, kind, message):
        if self.tok.kind != kind:
            self.fail(message)
        return self.advance()

    def parse(self):
        result = self.expr()
        if self.tok.kind != "end":
            self.fail("expected an operator")
        return result

    def expr(self):
        sign = 1
        if self.tok.kind in "+-":
            sign = -1 if self.advance().kind == "-" else 1
        result = self.term().scale(sign)
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def starts_factor(self):
        return self.tok.kind in ("num", "var", "(")

    def term(self):
        if not self.starts_factor():
            self.fail("expected a coefficient, variable or '('")
        result = self.factor()
        while True:
            if self.tok.kind == "*":
                self.advance()
                if not self.starts_factor():
                    self.fail("expected a factor after '*'")
            elif not self.starts_factor():
                return result
            result = result * self.factor()

    def exponent(self):
        if self.tok.kind != "^":
            return 1
        self.advance()
        return self.expect("num", "expected a natural-number exponent").value

    def factor(self):
        tok = self.advance()
        if tok.kind == "num":
            value = Fraction(tok.value)
            if self.tok.kind == "/":
                self.advance()
                den = self.expect("num", "expected a denominator")
                if den.value == 0:
                    raise ZeroDenominator("zero denominator", den.pos, self.text)
                value /= den.value
            return Polynomial.constant(self.context, value)
        if tok.kind == "var":
            return Polynomial.variable(self.context, tok.value) ** self.exponent()
        # "("
        inner = self.expr()
        self.expect(")", "expected ')'")
        return inner ** self.exponent()


def parse(src: str | ExprSource, variables: Sequence[str] | None = None) -> Polynomial:
    """Parse ``src`` into a :class:`Polynomial`.

    With ``variables`` the context is exactly that list and every name in the
    text must belong to it; otherwise variables are collected in order of
    first appearance.
    """
    if isinstance(src, ExprSource):
        text, variables = src.text, src.declared_vars
    else:
        text = src
    declared = None
    if variables is not None:
        declared = VarContext(variables).names
    tokens = tokenize(text, declared)
    if declared is None:
        declared = tuple(dict.fromkeys(t.value for t in tokens if t.kind == "var"))
    return _Parser(tokens, VarContext(declared), text).parse()


def _monomial_text(names, mono) -> str:
    pieces = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e]
    joined = "".join(pieces)
    if len(pieces) > 1:
        # fall back to explicit '*' when juxtaposition would re-split differently
        used = [name for name, e in zip(names, mono) if e]
        split = [t.value for t in tokenize(joined, names) if t.kind == "var"]
        if split != used:
            joined = "*".join(pieces)
    return joined


def render(f: Polynomial) -> str:
    """Text form of ``f``, terms in lex-descending order."""
    if f.is_zero():
        return "0"
    names = f.context.names
    out = []
    for mono, c in f.items():
        mono_text = _monomial_text(names, mono)
        mag = abs(c)
        coeff = "" if mono_text and mag == 1 else str(mag)
        body = coeff + mono_text
        if not out:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def render_list(forms) -> str:
    return "[" + ", ".join(render(f) for f in forms) + "]"
