"""Real algebraic numbers: square-free defining polynomial + isolating interval.

Rationals embed as point intervals.  Every query (sign of a polynomial at the
number, comparison, approximation) is decided exactly; interval refinement is
only ever a search accelerator, never the verdict.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Polynomial, format_polynomial
from .roots import Interval, count_roots, refine_isolating


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class AlgebraicNumber:
    __slots__ = ("defining", "interval")

    def __init__(self, defining: Polynomial, interval: Interval):
        # a linear defining polynomial pins the value down exactly
        if defining.degree == 1 and not interval.is_point:
            root = -defining.coeffs[0] / defining.coeffs[1]
            interval = Interval.point(root)
        self.defining = defining
        self.interval = interval

    @classmethod
    def from_rational(cls, value) -> "AlgebraicNumber":
        value = Fraction(value)
        return cls(Polynomial([-value, 1]), Interval.point(value))

    @classmethod
    def from_root(cls, p: Polynomial, iv: Interval) -> "AlgebraicNumber":
        """The unique root of p inside iv (as produced by isolate_roots)."""
        q = p.square_free()
        if iv.is_point:
            return cls.from_rational(iv.lo)
        # the closed interval must isolate too, or bisection refinement
        # could chase a root sitting on the boundary
        if count_roots(q, iv.closure()) != 1:
            raise ValueError("interval does not isolate exactly one root")
        return cls(q, iv)

    @property
    def is_rational(self) -> bool:
        return self.interval.is_point

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational point")
        return self.interval.lo

    def refined(self) -> "AlgebraicNumber":
        if self.is_rational:
            return self
        iv = refine_isolating(self.defining, self.interval)
        if iv.is_point:
            return AlgebraicNumber.from_rational(iv.lo)
        return AlgebraicNumber(self.defining, iv)

    def refined_below(self, width: Fraction) -> "AlgebraicNumber":
        a = self
        while not a.is_rational and a.interval.width > width:
            a = a.refined()
        return a

    def approximate(self, eps) -> Fraction:
        """A rational within eps of the represented real."""
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        if self.is_rational:
            return self.rational_value
        return self.refined_below(eps).interval.midpoint

    def __float__(self) -> float:
        return float(self.approximate(Fraction(1, 10**17)))

    def sign_of_poly_at(self, q: Polynomial) -> int:
        """Exact sign of q evaluated at this number."""
        if q.is_zero:
            return 0
        if self.is_rational:
            return _sign(q(self.rational_value))
        g = self.defining.gcd(q)
        if g.degree >= 1 and count_roots(g, self.interval) >= 1:
            return 0
        a = self
        while count_roots(q, a.interval.closure()) > 0:
            a = a.refined()
            if a.is_rational:
                return _sign(q(a.rational_value))
        return _sign(q(a.interval.midpoint))

    def sign(self) -> int:
        return self.sign_of_poly_at(Polynomial([0, 1]))

    def equals(self, other: "AlgebraicNumber") -> bool:
        if self.is_rational and other.is_rational:
            return self.rational_value == other.rational_value
        if self.is_rational:
            return other.sign_of_poly_at(
                Polynomial([-self.rational_value, 1])
            ) == 0
        if other.is_rational:
            return self.sign_of_poly_at(
                Polynomial([-other.rational_value, 1])
            ) == 0
        g = self.defining.gcd(other.defining)
        if g.degree < 1:
            return False
        inter = self.interval.intersect(other.interval)
        if inter is None:
            return False
        # A root of g inside both isolating intervals is simultaneously the
        # unique root of each defining polynomial there, hence both numbers.
        return count_roots(g, inter) >= 1

    def compare(self, other: "AlgebraicNumber") -> int:
        if self.is_rational and other.is_rational:
            return _sign(self.rational_value - other.rational_value)
        if self.equals(other):
            return 0
        a, b = self, other
        while not (a.interval.hi <= b.interval.lo or b.interval.hi <= a.interval.lo):
            a, b = a.refined(), b.refined()
        return -1 if a.interval.hi <= b.interval.lo else 1

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rational_value)
        return (
            f"root of {format_polynomial(self.defining)} in {self.interval}"
        )

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self})"


def _gauss_det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant over Q by fraction Gaussian elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def scalar_resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Resultant of two univariate polynomials (Sylvester determinant)."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    rows: list[list[Fraction]] = []
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([Fraction(0)] * i + fdesc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + gdesc + [Fraction(0)] * (size - m - 1 - i))
    return _gauss_det(rows)


def _lagrange(points: list[tuple[Fraction, Fraction]]) -> Polynomial:
    acc = Polynomial()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = Polynomial([yi])
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Polynomial([-xj, 1]).scale(Fraction(1, 1) / (xi - xj))
        acc = acc + basis
    return acc


def value_defining_polynomial(defining: Polynomial, p: Polynomial) -> Polynomial:
    """Nonzero polynomial vanishing at p(alpha) for every root alpha of defining.

    Computed as Res_x(defining(x), y - p(x)) by evaluation/interpolation in y.
    """
    n = defining.degree
    points: list[tuple[Fraction, Fraction]] = []
    for k in range(n + 1):
        y = Fraction(k)
        points.append((y, scalar_resultant(defining, Polynomial.constant(y) - p)))
    return _lagrange(points)


def evaluate_poly_at(p: Polynomial, a: AlgebraicNumber) -> AlgebraicNumber:
    """The value p(a) as an exact algebraic number."""
    if a.is_rational:
        return AlgebraicNumber.from_rational(p(a.rational_value))
    if p.degree <= 0:
        return AlgebraicNumber.from_rational(p(Fraction(0)))
    d = value_defining_polynomial(a.defining, p).square_free()
    while True:
        lo, hi = p.eval_interval(a.interval.lo, a.interval.hi)
        if lo == hi:
            return AlgebraicNumber.from_rational(lo)
        if count_roots(d, Interval(lo, hi)) == 1:
            if d(lo) == 0:
                return AlgebraicNumber.from_rational(lo)
            if d(hi) == 0:
                return AlgebraicNumber.from_rational(hi)
            return AlgebraicNumber(d, Interval(lo, hi, lo_open=True, hi_open=True))
        a = a.refined()
        if a.is_rational:
            return AlgebraicNumber.from_rational(p(a.rational_value))
