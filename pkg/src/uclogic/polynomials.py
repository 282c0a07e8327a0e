"""Dense univariate polynomials over exact rationals.

Coefficients are stored constant-term first, with no trailing zeros.  The
variable prints as ``nu``.  All arithmetic is exact; evaluation at a
``Fraction`` returns a ``Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import ParseError

Rat = Union[Fraction, int]


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Rat) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, k: Rat) -> "Polynomial":
        k = Fraction(k)
        return Polynomial([c * k for c in self.coeffs])

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Rat) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Enclosure of the image of [lo, hi] (interval Horner, exact ends)."""
        alo = ahi = Fraction(0)
        for c in reversed(self.coeffs):
            prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(prods) + c, max(prods) + c
        return alo, ahi

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[: other.degree])

    __divmod__ = divmod

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.coeffs[-1])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def square_free(self) -> "Polynomial":
        """Largest square-free divisor (same distinct roots)."""
        if self.degree < 1:
            return self
        return self.exact_div(self.gcd(self.derivative()))

    def root_bound(self) -> Fraction:
        """Cauchy bound: every real root has absolute value below this."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.coeffs[-1])
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lead

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


ZERO = Polynomial()
ONE = Polynomial([1])
NU = Polynomial([0, 1])


def format_polynomial(p: Polynomial, var: str = "nu") -> str:
    """Canonical sparse text, descending powers: ``2*nu^2 - 2*nu + 1``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _PolyParser:
    """Recursive descent over +, -, *, /, ^ and parentheses."""

    def __init__(self, text: str, var: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.var = var

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def next(self) -> tuple[str, int]:
        if self.i >= len(self.tokens):
            raise ParseError("unexpected end of polynomial expression")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.i < len(self.tokens):
            tok, pos = self.tokens[self.i]
            raise ParseError(f"unexpected token {tok!r}", pos)
        return p

    def expr(self) -> Polynomial:
        if self.peek() == "-":
            self.next()
            acc = -self.term()
        else:
            if self.peek() == "+":
                self.next()
            acc = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while self.peek() in ("*", "/"):
            op, pos = self.next()
            rhs = self.power()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.degree != 0 or rhs.is_zero:
                    raise ParseError("division only by a nonzero constant", pos)
                acc = acc.scale(1 / rhs.coeffs[0])
        return acc

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() in ("^", "**"):
            _, pos = self.next()
            tok, tpos = self.next()
            if not tok.isdigit():
                raise ParseError("exponent must be a natural number", tpos)
            return base ** int(tok)
        return base

    def atom(self) -> Polynomial:
        tok, pos = self.next()
        if tok == "(":
            p = self.expr()
            close, cpos = self.next()
            if close != ")":
                raise ParseError("expected ')'", cpos)
            return p
        if tok == "-":
            return -self.atom()
        if tok.isdigit():
            return Polynomial.constant(int(tok))
        if tok == self.var:
            return Polynomial([0, 1])
        raise ParseError(f"unexpected token {tok!r}", pos)


def parse_polynomial(text: str, var: str = "nu") -> Polynomial:
    """Parse the canonical dialect plus parenthesized arithmetic."""
    return _PolyParser(text, var).parse()


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational strictly between lo and hi.

    Stern-Brocot / continued-fraction descent; lo < hi required.
    """
    if not lo < hi:
        raise ValueError("empty open interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    n = lo.numerator // lo.denominator
    if lo == n:
        if hi > n + 1:
            return Fraction(n + 1)
        # (n, hi): smallest m with n + 1/m inside
        inv = 1 / (hi - n)
        m = inv.numerator // inv.denominator + 1
        return n + Fraction(1, m)
    if hi > n + 1:
        return Fraction(n + 1)
    return n + 1 / simplest_between(1 / (hi - n), 1 / (lo - n))
