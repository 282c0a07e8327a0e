"""Existential decision and envelope optimization over one real variable.

This is the engine behind every real-arithmetic query the procedures emit:
a conjunction of polynomial sign conditions on an interval, and the maximum
of a pointwise-minimum of polynomials.  Verdicts are exact; floating point
never decides anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebraic import AlgebraicNumber, evaluate_poly_at
from .polynomials import Polynomial, simplest_between
from .roots import Interval, isolate_roots

_RELATIONS = {
    "<": (-1,),
    "<=": (-1, 0),
    "==": (0,),
    "!=": (-1, 1),
    ">": (1,),
    ">=": (0, 1),
}


@dataclass(frozen=True)
class SignCondition:
    """A polynomial compared against zero."""

    poly: Polynomial
    relation: str

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    def admits_sign(self, sign: int) -> bool:
        return sign in _RELATIONS[self.relation]

    def holds_at(self, x: Fraction) -> bool:
        v = self.poly(x)
        return self.admits_sign((v > 0) - (v < 0))

    def holds_at_algebraic(self, a: AlgebraicNumber) -> bool:
        return self.admits_sign(a.sign_of_poly_at(self.poly))

    def __str__(self) -> str:
        from .polynomials import format_polynomial

        return f"{format_polynomial(self.poly)} {self.relation} 0"


def _sorted_unique(nums: list[AlgebraicNumber]) -> list[AlgebraicNumber]:
    out: list[AlgebraicNumber] = []
    for a in nums:
        lo = 0
        hi = len(out)
        dup = False
        while lo < hi:
            mid = (lo + hi) // 2
            c = a.compare(out[mid])
            if c == 0:
                dup = True
                break
            if c < 0:
                hi = mid
            else:
                lo = mid + 1
        if not dup:
            out.insert(lo, a)
    return out


def _rational_bounds_between(
    a: AlgebraicNumber, b: AlgebraicNumber
) -> tuple[Fraction, Fraction]:
    """Rationals l < u with a < l and u < b... more precisely (l, u) inside (a, b)."""
    while True:
        la = a.rational_value if a.is_rational else a.interval.hi
        ub = b.rational_value if b.is_rational else b.interval.lo
        if la < ub:
            return la, ub
        a, b = a.refined(), b.refined()


def _roots_in(poly: Polynomial, iv: Interval) -> list[AlgebraicNumber]:
    sq = poly.square_free()
    return [AlgebraicNumber.from_root(sq, r) for r in isolate_roots(sq, iv)]


def exists_sat(
    conds: Iterable[SignCondition], iv: Interval
) -> tuple[bool, Optional[Fraction]]:
    """Does some real in iv satisfy every condition?

    Splits iv at all roots of the condition polynomials and tests one sample
    per open cell plus every breakpoint.  The witness, when present, is a
    small-denominator rational from the widest satisfying open cell.
    """
    work: list[SignCondition] = []
    for c in conds:
        if c.poly.is_zero:
            if not c.admits_sign(0):
                return False, None
        else:
            work.append(c)
    if iv.is_point:
        x = iv.lo
        ok = all(c.holds_at(x) for c in work)
        return ok, (x if ok else None)
    if not work:
        return True, simplest_between(iv.lo, iv.hi)

    points = [
        AlgebraicNumber.from_rational(iv.lo),
        AlgebraicNumber.from_rational(iv.hi),
    ]
    for c in work:
        points.extend(_roots_in(c.poly, iv.closure()))
    points = _sorted_unique(points)

    satisfiable = False
    point_witness: Optional[Fraction] = None
    best_cell: tuple[float, Fraction, Fraction] | None = None

    last = len(points) - 1
    for i, b in enumerate(points):
        if i == 0 and iv.lo_open:
            continue
        if i == last and iv.hi_open:
            continue
        if all(c.holds_at_algebraic(b) for c in work):
            satisfiable = True
            if b.is_rational and point_witness is None:
                point_witness = b.rational_value

    for a, b in zip(points, points[1:]):
        l, u = _rational_bounds_between(a, b)
        sample = simplest_between(l, u)
        if all(c.holds_at(sample) for c in work):
            satisfiable = True
            width = float(b.approximate(Fraction(1, 2**24))) - float(
                a.approximate(Fraction(1, 2**24))
            )
            if best_cell is None or width > best_cell[0]:
                # Shrink the cell bounds so the witness hugs the true cell.
                aa, bb = a, b
                for _ in range(12):
                    aa, bb = aa.refined(), bb.refined()
                l2, u2 = _rational_bounds_between(aa, bb)
                best_cell = (width, l2, u2)

    if best_cell is not None:
        return True, simplest_between(best_cell[1], best_cell[2])
    return satisfiable, point_witness


def _alg_in_interval(a: AlgebraicNumber, iv: Interval) -> bool:
    c_lo = a.compare(AlgebraicNumber.from_rational(iv.lo))
    if c_lo < 0 or (c_lo == 0 and iv.lo_open):
        return False
    c_hi = a.compare(AlgebraicNumber.from_rational(iv.hi))
    if c_hi > 0 or (c_hi == 0 and iv.hi_open):
        return False
    return True


def lower_envelope_max(
    polys: Sequence[Polynomial], iv: Interval
) -> tuple[AlgebraicNumber, AlgebraicNumber, bool]:
    """Maximum over the closure of iv of min(P(x) for P in polys).

    Returns (sup, argmax, attained).  attained is True iff some maximizer
    lies in iv itself, openness included.  The envelope is piecewise
    polynomial, so its maximum over the closure occurs at an interval
    endpoint, a root of some derivative, or a crossing of two members.
    """
    polys = list(dict.fromkeys(polys))
    if not polys:
        raise ValueError("empty polynomial set")
    closure = iv.closure()
    candidates: list[AlgebraicNumber] = [AlgebraicNumber.from_rational(iv.lo)]
    if not iv.is_point:
        candidates.append(AlgebraicNumber.from_rational(iv.hi))
        for p in polys:
            dp = p.derivative()
            if not dp.is_zero:
                candidates.extend(_roots_in(dp, closure))
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                diff = polys[i] - polys[j]
                if not diff.is_zero:
                    candidates.extend(_roots_in(diff, closure))
    candidates = _sorted_unique(candidates)

    # Active member of the envelope at each candidate, by exact sign tests.
    active: list[tuple[AlgebraicNumber, Polynomial]] = []
    for a in candidates:
        best = polys[0]
        for p in polys[1:]:
            if a.sign_of_poly_at(p - best) < 0:
                best = p
        active.append((a, best))

    # Exact-bound prefilter: discard candidates whose value enclosure lies
    # strictly below some other candidate's lower bound.
    enclosures: list[tuple[Fraction, Fraction]] = []
    for a, p in active:
        aa = a.refined_below(Fraction(1, 2**48))
        if aa.is_rational:
            v = p(aa.rational_value)
            enclosures.append((v, v))
        else:
            enclosures.append(p.eval_interval(aa.interval.lo, aa.interval.hi))
    floor = max(lo for lo, _ in enclosures)
    survivors = [
        (a, p) for (a, p), (_, hi) in zip(active, enclosures) if hi >= floor
    ]

    values = [evaluate_poly_at(p, a) for a, p in survivors]
    best_idx = 0
    for k in range(1, len(values)):
        if values[k].compare(values[best_idx]) > 0:
            best_idx = k
    sup = values[best_idx]
    winners = [
        survivors[k][0]
        for k in range(len(values))
        if values[k].compare(sup) == 0
    ]
    argmax = winners[0]
    attained = False
    for w in winners:
        if _alg_in_interval(w, iv):
            argmax = w
            attained = True
            break
    return sup, argmax, attained


def approximate(a: AlgebraicNumber, eps) -> Fraction:
    """Rational within eps of a (bisection refinement of the isolator)."""
    return a.approximate(eps)
